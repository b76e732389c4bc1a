#include "mes/eisenstein.hpp"
#include "mes/json_io.hpp"
#include "mes/mzv.hpp"
#include "mes/relations.hpp"
#include "mes/runtime.hpp"
#include "mes/words.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <complex>
#include <iostream>

using namespace mes;

namespace {

// exit codes documented in the README
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitTolerance = 4;
constexpr int kExitRange = 5;

struct Emitter {
    std::string command;
    Json parameters = Json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const Json& result) const
    {
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        Json record{{"schema_version", 1},
                    {"command", command},
                    {"parameters", parameters},
                    {"result", result},
                    {"timing_ms", ms}};
        std::cout << record.dump(2) << "\n";
    }
};

Json complex_json(std::complex<double> z, double err = 0.0)
{
    return Json{{"re", z.real()}, {"im", z.imag()}, {"abs_err", err}};
}

BinaryWord parse_word_arg(const std::string& text)
{
    BinaryWord w;
    if (text == "e" || text == "-") return w;
    for (char ch : text) {
        if (ch != '0' && ch != '1') throw CLI::ValidationError("word must be over {0,1}");
        w.push_back(ch == '1');
    }
    return w;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact kernel for multiple Eisenstein series, the Goncharov "
                 "coproduct and double shuffle relations"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string comp_arg, word_arg, format = "json";
    int left = 0, right = 1;
    int order = 30, dims_order = 60, weight = -1, max_weight = 10, lat_L = 300, lat_M = 300;
    int deriv_N = 4;
    double tol = 1e-8;
    std::vector<double> tau_arg{0.0, 1.0};
    bool no_tail = false;

    auto* reduce_cmd = app.add_subcommand("reduce", "expand a symbol in the canonical basis");
    reduce_cmd->add_option("left", left, "left endpoint (0 or 1)")->required();
    reduce_cmd->add_option("word", word_arg, "letter word over {0,1}, or 'e' for empty")
        ->required();
    reduce_cmd->add_option("right", right, "right endpoint (0 or 1)")->required();

    auto* coproduct_cmd = app.add_subcommand("coproduct", "Goncharov coproduct of an index");
    coproduct_cmd->add_option("index", comp_arg, "comma-separated parts, e.g. 2,2")->required();

    auto* zetash_cmd =
        app.add_subcommand("zeta-sh", "shuffle-regularized zeta as a polynomial in T");
    zetash_cmd->add_option("index", comp_arg)->required();

    auto* gseries_cmd = app.add_subcommand("gseries", "multiple divisor-sum series g~");
    gseries_cmd->add_option("index", comp_arg)->required();
    gseries_cmd->add_option("--order", order, "q-truncation order");

    auto* gsh_cmd = app.add_subcommand("gsh", "shuffle-regularized series g~sh");
    gsh_cmd->add_option("index", comp_arg)->required();
    gsh_cmd->add_option("--order", order, "q-truncation order");

    auto* mes_cmd =
        app.add_subcommand("mes", "regularized multiple Eisenstein series (normalized)");
    mes_cmd->add_option("index", comp_arg)->required();
    mes_cmd->add_option("--order", order, "q-truncation order");

    auto* fourier_cmd =
        app.add_subcommand("fourier", "Fourier expansion of the classical series");
    fourier_cmd->add_option("index", comp_arg)->required();
    fourier_cmd->add_option("--order", order, "q-truncation order");

    auto* lattice_cmd = app.add_subcommand("lattice", "truncated ordered lattice sum");
    lattice_cmd->add_option("index", comp_arg)->required();
    lattice_cmd->add_option("--tau", tau_arg, "evaluation point, two reals")->expected(2);
    lattice_cmd->add_option("--L", lat_L, "row cutoff");
    lattice_cmd->add_option("--M", lat_M, "inner cutoff");
    lattice_cmd->add_flag("--no-tail", no_tail, "disable the inner tail correction");

    auto* relations_cmd =
        app.add_subcommand("relations", "double shuffle relations and their counts");
    relations_cmd->add_option("--weight", weight, "list the relation vectors of one weight");
    relations_cmd->add_option("--max-weight", max_weight, "count table range (default 10)");
    relations_cmd->add_option("--format", format, "json or csv");

    auto* dims_cmd = app.add_subcommand("dims", "graded dimensions of the q-series span");
    dims_cmd->add_option("--max-weight", max_weight)->required();
    dims_cmd->add_option("--order", dims_order, "q-truncation order (default 60)");
    dims_cmd->add_option("--format", format, "json or csv");

    auto* verify_cmd = app.add_subcommand("verify", "verification bundles");
    std::string which;
    verify_cmd->add_option("check", which, "fourier | derivative | vanishing | eq46")
        ->required();
    verify_cmd->add_option("--max-weight", max_weight, "weight range where applicable");
    verify_cmd->add_option("--order", order, "q-truncation order");
    verify_cmd->add_option("--N", deriv_N, "largest derivative index (derivative check)");
    verify_cmd->add_option("--tol", tol, "numeric tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Emitter out;
    try {
        if (reduce_cmd->parsed()) {
            out.command = "reduce";
            const BinaryWord w = parse_word_arg(word_arg);
            out.parameters = {{"left", left}, {"word", word_arg}, {"right", right}};
            out.emit(Json{{"expansion", to_json(reduce(IntegralSymbol{left, w, right}))}});
        } else if (coproduct_cmd->parsed()) {
            out.command = "coproduct";
            const Composition c = parse_composition(comp_arg);
            out.parameters = {{"index", to_json(c)}};
            out.emit(Json{{"tensor", to_json(coproduct(c))}});
        } else if (zetash_cmd->parsed()) {
            out.command = "zeta-sh";
            const Composition c = parse_composition(comp_arg);
            out.parameters = {{"index", to_json(c)}};
            const RegPolynomial p = shuffle_regularize(c);
            Json degrees = Json::array();
            for (int d = 0; d <= p.degree(); ++d) degrees.push_back(to_json(p.coeff(d)));
            out.emit(Json{{"t_polynomial", degrees}, {"constant_term", to_json(p.coeff(0))}});
        } else if (gseries_cmd->parsed()) {
            out.command = "gseries";
            const Composition c = parse_composition(comp_arg);
            out.parameters = {{"index", to_json(c)}, {"order", order}};
            out.emit(Json{{"series", to_json(g_tilde(c, order))}});
        } else if (gsh_cmd->parsed()) {
            out.command = "gsh";
            const Composition c = parse_composition(comp_arg);
            out.parameters = {{"index", to_json(c)}, {"order", order}};
            out.emit(Json{{"series", to_json(g_tilde_sh(c, order))}});
        } else if (mes_cmd->parsed()) {
            out.command = "mes";
            const Composition c = parse_composition(comp_arg);
            out.parameters = {{"index", to_json(c)}, {"order", order}};
            out.emit(Json{{"tensor", to_json(mes_sh(c, order))}});
        } else if (fourier_cmd->parsed()) {
            out.command = "fourier";
            const Composition c = parse_composition(comp_arg);
            out.parameters = {{"index", to_json(c)}, {"order", order}};
            out.emit(Json{{"tensor", to_json(fourier_expansion(c, order))}});
        } else if (lattice_cmd->parsed()) {
            out.command = "lattice";
            const Composition c = parse_composition(comp_arg);
            LatticeParams p;
            p.tau = {tau_arg[0], tau_arg[1]};
            p.L = lat_L;
            p.M = lat_M;
            p.tail_correction = !no_tail;
            out.parameters = {{"index", to_json(c)},
                              {"tau", {tau_arg[0], tau_arg[1]}},
                              {"L", lat_L},
                              {"M", lat_M},
                              {"tail_correction", p.tail_correction}};
            out.emit(Json{{"value", complex_json(lattice_eval(c, p))}});
        } else if (relations_cmd->parsed()) {
            out.command = "relations";
            if (weight >= 0) {
                out.parameters = {{"weight", weight}};
                Json rels = Json::array();
                for (const auto& v : relations_of_weight(weight))
                    rels.push_back(Json{{"pair", {to_json(v.lhs), to_json(v.rhs)}},
                                        {"coefficients", to_json(v.coeffs)}});
                out.emit(Json{{"relations", rels}});
            } else {
                const auto counts = relation_count_table(max_weight);
                if (format == "csv") {
                    std::cout << "N,independent_relations\n";
                    for (std::size_t n = 0; n < counts.size(); ++n)
                        std::cout << n << "," << counts[n] << "\n";
                } else {
                    out.parameters = {{"max_weight", max_weight}};
                    out.emit(Json{{"counts", counts}});
                }
            }
        } else if (dims_cmd->parsed()) {
            out.command = "dims";
            const auto dims = q_dimension_table(max_weight, dims_order);
            if (format == "csv") {
                std::cout << "N,dim\n";
                for (std::size_t i = 0; i < dims.size(); ++i)
                    std::cout << (i + 2) << "," << dims[i] << "\n";
            } else {
                out.parameters = {{"max_weight", max_weight}, {"order", dims_order}};
                out.emit(Json{{"dims_from_weight_2", dims}});
            }
        } else if (verify_cmd->parsed()) {
            out.command = "verify";
            out.parameters = {{"check", which}};
            bool ok = true;
            Json detail = Json::object();
            if (which == "eq46") {
                QSeries lhs = g_tilde_sh(Composition{2}, std::max(order, 50));
                lhs *= ratio(-1, 6);
                lhs += g_tilde_sh(Composition{4}, lhs.order());
                QSeries four = g_tilde_sh(Composition{1, 3}, lhs.order());
                four *= Rational(4);
                lhs -= four;
                ok = lhs.is_zero();
                detail = {{"identity", "-1/6 gsh_2 + gsh_4 - 4 gsh_{1,3} = 0"},
                          {"order", lhs.order()},
                          {"exact", ok}};
            } else if (which == "derivative") {
                Json per = Json::array();
                for (int n = 1; n <= deriv_N; ++n) {
                    const bool good = verify_derivative_formula(n, std::min(order, 20), tol);
                    per.push_back(Json{{"N", n}, {"ok", good}});
                    ok = ok && good;
                }
                detail = {{"per_index", per}, {"tol", tol}};
            } else if (which == "vanishing") {
                Json per = Json::array();
                for (int w = 4; w <= std::min(max_weight, 8); ++w)
                    for (const auto& c : compositions_of_weight(w, 2)) {
                        if (c.depth() < 2 || c.depth() > 3) continue;
                        const bool good = check_vanishing(c, tol);
                        per.push_back(Json{{"index", to_json(c)}, {"ok", good}});
                        ok = ok && good;
                    }
                detail = {{"per_index", per}, {"tol", tol}};
            } else if (which == "fourier") {
                Json per = Json::array();
                for (int w = 2; w <= std::min(max_weight, 8); ++w)
                    for (const auto& c : compositions_of_weight(w, 2)) {
                        MzvQTensor diff = mes_sh(c, std::min(order, 20));
                        diff -= fourier_expansion(c, std::min(order, 20));
                        const bool exact = diff.terms.empty();
                        bool good = exact;
                        if (!exact) {
                            const MzvQTensor folded = reduce_known_constants(diff);
                            bool folded_zero = folded.terms.empty();
                            if (folded_zero) {
                                good = true;
                            } else {
                                const NumericSeries ns = numeric_eval(diff, 1e-11);
                                double mx = 0;
                                for (const auto& z : ns.coeff) mx = std::max(mx, std::abs(z));
                                good = mx <= tol;
                            }
                        }
                        per.push_back(
                            Json{{"index", to_json(c)}, {"exact", exact}, {"ok", good}});
                        ok = ok && good;
                    }
                detail = {{"per_index", per}, {"tol", tol}};
            } else {
                throw CLI::ValidationError("unknown check '" + which + "'");
            }
            out.emit(Json{{"ok", ok}, {"detail", detail}});
            if (!ok) return kExitTolerance;
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::domain_error& e) {
        std::cerr << "range: " << e.what() << "\n";
        return kExitRange;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTolerance;
    }
    return 0;
}
