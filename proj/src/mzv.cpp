#include "mes/mzv.hpp"

#include "mes/words.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace mes {

const LinComb<Composition>& RegPolynomial::coeff(int d) const
{
    static const LinComb<Composition> zero;
    if (d < 0 || d >= static_cast<int>(coeffs.size())) return zero;
    return coeffs[static_cast<std::size_t>(d)];
}

static RegPolynomial reg_monomial(const Composition& c)
{
    RegPolynomial p;
    p.coeffs.push_back(LinComb<Composition>::unit(c));
    return p;
}

static void reg_add(RegPolynomial& a, const RegPolynomial& b, const Rational& scale)
{
    if (a.coeffs.size() < b.coeffs.size()) a.coeffs.resize(b.coeffs.size());
    for (std::size_t d = 0; d < b.coeffs.size(); ++d) {
        LinComb<Composition> t = b.coeffs[d];
        t *= scale;
        a.coeffs[d] += t;
    }
    while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
}

static RegPolynomial reg_shift(const RegPolynomial& p) // multiply by T
{
    RegPolynomial out;
    if (p.coeffs.empty()) return out;
    out.coeffs.resize(p.coeffs.size() + 1);
    for (std::size_t d = 0; d < p.coeffs.size(); ++d) out.coeffs[d + 1] = p.coeffs[d];
    return out;
}

static int trailing_ones(const BinaryWord& w)
{
    int m = 0;
    for (auto it = w.rbegin(); it != w.rend() && *it == 1; ++it) ++m;
    return m;
}

static RegPolynomial regularize_word(const BinaryWord& w)
{
    if (w.empty()) return reg_monomial(Composition{});
    if (w.back() == 0) return reg_monomial(word_to_composition(w));

    const int m = trailing_ones(w);
    BinaryWord v(w.begin(), w.end() - 1);

    // v sh (1) = m * w + lower terms (fewer trailing ones)
    RegPolynomial out = reg_shift(regularize_word(v));
    const LinComb<BinaryWord> peeled = shuffle(v, BinaryWord{1});
    for (const auto& [u, cu] : peeled.terms()) {
        if (u == w) continue;
        reg_add(out, regularize_word(u), -cu);
    }
    for (auto& lc : out.coeffs) lc *= ratio(1, m);
    return out;
}

RegPolynomial shuffle_regularize(const Composition& c)
{
    if (!c.all_parts_at_least(1))
        throw std::invalid_argument("shuffle_regularize: parts >= 1");
    return regularize_word(composition_to_word(c));
}

LinComb<Composition> zeta_sh_symbol(const Composition& c)
{
    RegPolynomial p = shuffle_regularize(c);
    return p.coeff(0);
}

// ---------------------------------------------------------------------------
// Numerics.  zeta(c) is evaluated by splitting the iterated integral at 1/2:
//   zeta(w) = sum over cuts  Li(prefix)(1/2) * Li(reverse complement of
//   suffix)(1/2),
// every factor being a geometrically convergent multiple polylogarithm.
// ---------------------------------------------------------------------------

namespace {

constexpr int kLiTerms = 96;
constexpr double kEvalErrorBound = 1e-12;

// Li_{m1,...,ms}(1/2) = sum_{0<u1<...<us} 2^{-us} / (u1^{m1} ... us^{ms}).
double li_half(const BinaryWord& word)
{
    if (word.empty()) return 1.0;
    const Composition m = word_to_composition(word);
    const int s = m.depth();

    std::vector<double> cum(kLiTerms + 1, 1.0); // cumulative sums of the previous level
    for (int j = 0; j < s - 1; ++j) {
        std::vector<double> next(kLiTerms + 1, 0.0);
        for (int u = 1; u <= kLiTerms; ++u)
            next[static_cast<std::size_t>(u)] =
                next[static_cast<std::size_t>(u - 1)] +
                cum[static_cast<std::size_t>(u - 1)] *
                    std::pow(static_cast<double>(u), -m.parts[static_cast<std::size_t>(j)]);
        cum = std::move(next);
    }
    double total = 0.0;
    double z = 1.0;
    for (int u = 1; u <= kLiTerms; ++u) {
        z *= 0.5;
        total += z * cum[static_cast<std::size_t>(u - 1)] *
                 std::pow(static_cast<double>(u), -m.parts[static_cast<std::size_t>(s - 1)]);
    }
    return total;
}

double mzv_split_eval(const Composition& c)
{
    const BinaryWord a = composition_to_word(c);
    const int N = static_cast<int>(a.size());
    double total = 0.0;
    for (int k = 0; k <= N; ++k) {
        BinaryWord prefix(a.begin(), a.begin() + k);
        BinaryWord rc; // reverse complement of the suffix
        rc.reserve(static_cast<std::size_t>(N - k));
        for (int i = N - 1; i >= k; --i) rc.push_back(a[static_cast<std::size_t>(i)] ? 0 : 1);
        total += li_half(prefix) * li_half(rc);
    }
    return total;
}

} // namespace

MzvValue mzv_eval(const Composition& c, double tol)
{
    if (c.empty()) return {std::complex<double>(1.0, 0.0), 0.0};
    if (!c.admissible() || !c.all_parts_at_least(1))
        throw std::domain_error("mzv_eval: index not admissible");
    if (c.weight() > 12 || c.depth() > 4)
        throw std::domain_error("mzv_eval: outside supported range (weight <= 12, depth <= 4)");
    if (tol < kEvalErrorBound)
        throw std::runtime_error("mzv_eval: requested tolerance below evaluator accuracy");
    return {std::complex<double>(mzv_split_eval(c), 0.0), kEvalErrorBound};
}

static std::complex<double> minus_two_pi_i_pow(int w)
{
    // (-2 pi i)^w = (2 pi)^w * (-i)^w
    const double mag = std::pow(2.0 * std::numbers::pi, w);
    switch (((w % 4) + 4) % 4) {
    case 0: return {mag, 0.0};
    case 1: return {0.0, -mag};
    case 2: return {-mag, 0.0};
    default: return {0.0, mag};
    }
}

MzvValue zeta_tilde_eval(const Composition& c, double tol)
{
    const int w = c.weight();
    const double scale = std::pow(2.0 * std::numbers::pi, w);
    MzvValue v = mzv_eval(c, tol * scale);
    return {v.value / minus_two_pi_i_pow(w), v.abs_error / scale};
}

Rational bernoulli(unsigned n)
{
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::scoped_lock lock(mutex);
    while (cache.size() <= n) {
        const unsigned k = static_cast<unsigned>(cache.size());
        // sum_{j=0}^{k} C(k+1, j) B_j = 0
        Rational s(0);
        for (unsigned j = 0; j < k; ++j) s += Rational(binomial(k + 1, j)) * cache[j];
        cache.push_back(-s / Rational(binomial(k + 1, k)));
    }
    return cache[n];
}

std::optional<Rational> zeta_tilde_exact(const Composition& c)
{
    if (c.empty()) return Rational(1);
    if (c.depth() == 1) {
        const int n = c.parts[0];
        if (n >= 2 && n % 2 == 0) {
            // zeta~(2k) = -B_{2k} / (2 (2k)!)
            return -bernoulli(static_cast<unsigned>(n)) /
                   (Rational(2) * Rational(factorial(static_cast<unsigned long>(n))));
        }
        return std::nullopt;
    }
    if (c == Composition{1, 3}) return ratio(1, 5760);
    if (c == Composition{2, 2}) return ratio(3, 5760);
    return std::nullopt;
}

std::complex<double> eval_symbol(const LinComb<Composition>& symbols, double tol)
{
    std::complex<double> total(0.0, 0.0);
    for (const auto& [c, x] : symbols.terms())
        total += x.get_d() * mzv_eval(c, tol).value;
    return total;
}

std::complex<double> eval_symbol_tilde(const LinComb<Composition>& symbols, double tol)
{
    std::complex<double> total(0.0, 0.0);
    for (const auto& [c, x] : symbols.terms())
        total += x.get_d() * zeta_tilde_eval(c, tol).value;
    return total;
}

} // namespace mes
