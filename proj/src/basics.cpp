#include "mes/composition.hpp"
#include "mes/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mes {

Integer factorial(unsigned long n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(long n, long k)
{
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return Integer(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

Integer int_pow(const Integer& base, unsigned long exp)
{
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), exp);
    return p;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b)
{
    if (int wa = a.weight(), wb = b.weight(); wa != wb)
        return wa <=> wb;
    if (int da = a.depth(), db = b.depth(); da != db)
        return da <=> db;
    for (int i = 0; i < a.depth(); ++i)
        if (a.parts[i] != b.parts[i]) return a.parts[i] <=> b.parts[i];
    return std::strong_ordering::equal;
}

std::string to_string(const Composition& c)
{
    if (c.empty()) return "()";
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < c.depth(); ++i) {
        if (i) os << ',';
        os << c.parts[i];
    }
    os << ')';
    return os.str();
}

Composition parse_composition(const std::string& text)
{
    Composition c;
    if (text.empty() || text == "()") return c;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 1)
            throw std::invalid_argument("parse_composition: bad part '" + tok + "'");
        c.parts.push_back(v);
    }
    return c;
}

std::string to_string(const BinaryWord& w)
{
    std::string s;
    s.reserve(w.size());
    for (auto a : w) s += (a ? '1' : '0');
    return s.empty() ? "e" : s;
}

BinaryWord composition_to_word(const Composition& c)
{
    BinaryWord w;
    w.reserve(static_cast<std::size_t>(c.weight()));
    for (int p : c.parts) {
        w.push_back(1);
        for (int i = 1; i < p; ++i) w.push_back(0);
    }
    return w;
}

Composition word_to_composition(const BinaryWord& w)
{
    Composition c;
    if (w.empty()) return c;
    if (w.front() != 1)
        throw std::invalid_argument("word_to_composition: word starts with 0");
    for (auto a : w) {
        if (a)
            c.parts.push_back(1);
        else
            ++c.parts.back();
    }
    return c;
}

XYWord parse_xyword(const std::string& text)
{
    XYWord w;
    for (char ch : text) {
        if (ch != 'x' && ch != 'y')
            throw std::invalid_argument("parse_xyword: letters must be x or y");
        w.push_back(ch);
    }
    return w;
}

std::string to_string(const XYWord& w)
{
    return w.empty() ? std::string("e") : std::string(w.begin(), w.end());
}

std::vector<int> y_positions(const XYWord& w)
{
    std::vector<int> t;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] == 'y') t.push_back(i + 1);
    return t;
}

static void compositions_rec(int rest, int min_part, Composition& cur,
                             std::vector<Composition>& out)
{
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = min_part; p <= rest; ++p) {
        cur.parts.push_back(p);
        compositions_rec(rest - p, min_part, cur, out);
        cur.parts.pop_back();
    }
}

std::vector<Composition> compositions_of_weight(int weight, int min_part)
{
    std::vector<Composition> out;
    Composition cur;
    compositions_rec(weight, min_part, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> admissible_compositions_of_weight(int weight)
{
    std::vector<Composition> out;
    for (const auto& c : compositions_of_weight(weight))
        if (!c.empty() && c.admissible()) out.push_back(c);
    return out;
}

} // namespace mes
