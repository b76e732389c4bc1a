#pragma once

#include "mes/composition.hpp"
#include "mes/eisenstein.hpp"
#include "mes/hopf.hpp"
#include "mes/lincomb.hpp"
#include "mes/qseries.hpp"

#include <json.hpp>

namespace mes {

// Machine-readable payloads: exact rationals always travel as decimal-string
// pairs [num, den], never as floats.
using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r)
{
    return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

inline Rational rational_from_json(const Json& j)
{
    Rational r(Integer(j.at(0).get<std::string>()), Integer(j.at(1).get<std::string>()));
    r.canonicalize();
    return r;
}

inline Json to_json(const Composition& c)
{
    Json a = Json::array();
    for (int p : c.parts) a.push_back(p);
    return a;
}

inline Composition composition_from_json(const Json& j)
{
    Composition c;
    for (const auto& v : j) c.parts.push_back(v.get<int>());
    return c;
}

inline Json to_json(const LinComb<Composition>& lc)
{
    Json a = Json::array();
    for (const auto& [c, x] : lc.terms())
        a.push_back(Json{{"basis", to_json(c)}, {"coeff", to_json(x)}});
    return a;
}

inline LinComb<Composition> lincomb_from_json(const Json& j)
{
    LinComb<Composition> lc;
    for (const auto& t : j)
        lc.add(composition_from_json(t.at("basis")), rational_from_json(t.at("coeff")));
    return lc;
}

inline Json to_json(const TensorLinComb& t)
{
    Json a = Json::array();
    for (const auto& [pair, x] : t.terms())
        a.push_back(Json{{"left", to_json(pair.first)},
                         {"right", to_json(pair.second)},
                         {"coeff", to_json(x)}});
    return a;
}

inline TensorLinComb tensor_from_json(const Json& j)
{
    TensorLinComb t;
    for (const auto& e : j)
        t.add({composition_from_json(e.at("left")), composition_from_json(e.at("right"))},
              rational_from_json(e.at("coeff")));
    return t;
}

inline Json to_json(const QSeries& s)
{
    Json coeffs = Json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(to_json(s.coeff(n)));
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline QSeries qseries_from_json(const Json& j)
{
    QSeries s(j.at("order").get<int>());
    const auto& coeffs = j.at("coeffs");
    for (int n = 0; n <= s.order(); ++n)
        s.set_coeff(n, rational_from_json(coeffs.at(static_cast<std::size_t>(n))));
    return s;
}

inline Json to_json(const MzvQTensor& t)
{
    Json a = Json::array();
    for (const auto& [u, f] : t.terms)
        a.push_back(Json{{"symbol", to_json(u)}, {"series", to_json(f)}});
    return Json{{"order", t.order}, {"terms", a}};
}

inline MzvQTensor mzvqtensor_from_json(const Json& j)
{
    MzvQTensor t;
    t.order = j.at("order").get<int>();
    for (const auto& e : j.at("terms"))
        t.add(composition_from_json(e.at("symbol")), qseries_from_json(e.at("series")));
    return t;
}

} // namespace mes
