#include "mes/eisenstein.hpp"

#include "mes/mzv.hpp"
#include "mes/runtime.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mes {

void MzvQTensor::add(const Composition& u, const QSeries& f)
{
    auto [it, inserted] = terms.emplace(u, f.truncated(order));
    if (!inserted) it->second += f;
    if (it->second.is_zero()) terms.erase(it);
}

MzvQTensor& MzvQTensor::operator+=(const MzvQTensor& o)
{
    order = std::min(order, o.order);
    for (const auto& [u, f] : o.terms) add(u, f);
    return *this;
}

MzvQTensor& MzvQTensor::operator-=(const MzvQTensor& o)
{
    order = std::min(order, o.order);
    for (const auto& [u, f] : o.terms) {
        QSeries neg = f;
        neg *= Rational(-1);
        add(u, neg);
    }
    return *this;
}

MzvQTensor& MzvQTensor::operator*=(const Rational& s)
{
    if (is_zero(s)) {
        terms.clear();
        return *this;
    }
    for (auto& [u, f] : terms) f *= s;
    return *this;
}

const QSeries* MzvQTensor::find(const Composition& u) const
{
    auto it = terms.find(u);
    return it == terms.end() ? nullptr : &it->second;
}

MzvQTensor apply_q_derivative(const MzvQTensor& t)
{
    MzvQTensor out;
    out.order = t.order;
    for (const auto& [u, f] : t.terms) out.add(u, q_derivative(f));
    return out;
}

MzvQTensor reduce_known_constants(const MzvQTensor& t)
{
    MzvQTensor out;
    out.order = t.order;
    for (const auto& [u, f] : t.terms) {
        if (auto v = zeta_tilde_exact(u)) {
            QSeries scaled = f;
            scaled *= *v;
            out.add(Composition{}, scaled);
        } else {
            out.add(u, f);
        }
    }
    return out;
}

MzvQTensor mes_sh(const Composition& c, int order, const Budget& budget)
{
    MzvQTensor out;
    out.order = order;
    std::map<Composition, LinComb<Composition>> symbol_cache;
    std::map<Composition, QSeries> series_cache;

    const TensorLinComb cop = coproduct(c);
    for (const auto& [pair, coeff] : cop.terms()) {
        auto sit = symbol_cache.find(pair.first);
        if (sit == symbol_cache.end())
            sit = symbol_cache.emplace(pair.first, zeta_sh_symbol(pair.first)).first;
        if (sit->second.is_zero()) continue;
        auto qit = series_cache.find(pair.second);
        if (qit == series_cache.end())
            qit = series_cache.emplace(pair.second, g_tilde_sh(pair.second, order, budget)).first;
        for (const auto& [u, cu] : sit->second.terms()) {
            QSeries f = qit->second;
            f *= coeff * cu;
            out.add(u, f);
        }
    }
    return out;
}

MzvQTensor fourier_word(const Composition& c, const XYWord& w, int order)
{
    if (!c.all_parts_at_least(2))
        throw std::invalid_argument("fourier_expansion: all parts must be >= 2");
    if (static_cast<int>(w.size()) != c.depth())
        throw std::invalid_argument("fourier_word: marker word length must equal the depth");
    MzvQTensor out;
    out.order = order;
    std::map<Composition, QSeries> series_cache;

    const std::vector<int> t = y_positions(w);
    Composition prefix;
    const int t1 = t.empty() ? c.depth() + 1 : t.front();
    prefix.parts.assign(c.parts.begin(), c.parts.begin() + (t1 - 1));

    if (t.empty()) {
        out.add(prefix, QSeries::one(order));
        return out;
    }

    enumerate_marker_terms(
        c, t, 2,
        [&](const Integer& coeff, const std::vector<Composition>& factors,
            const Composition& right) {
            LinComb<Composition> sym = LinComb<Composition>::unit(prefix);
            for (const auto& f : factors) sym = harmonic(sym, LinComb<Composition>::unit(f));
            auto it = series_cache.find(right);
            if (it == series_cache.end())
                it = series_cache.emplace(right, g_tilde(right, order)).first;
            for (const auto& [u, cu] : sym.terms()) {
                QSeries f = it->second;
                f *= Rational(coeff) * cu;
                out.add(u, f);
            }
        });
    return out;
}

MzvQTensor fourier_expansion(const Composition& c, int order)
{
    if (!c.all_parts_at_least(2))
        throw std::invalid_argument("fourier_expansion: all parts must be >= 2");
    const int r = c.depth();
    MzvQTensor out;
    out.order = order;
    for (unsigned long wmask = 0; wmask < (1ul << r); ++wmask) {
        XYWord w;
        for (int i = 0; i < r; ++i) w.push_back((wmask & (1ul << i)) ? 'y' : 'x');
        out += fourier_word(c, w, order);
    }
    return out;
}

MzvQTensor psi_applied(const Composition& c, const XYWord& w, int order)
{
    MzvQTensor out;
    out.order = order;
    std::map<Composition, QSeries> series_cache;
    const TensorLinComb tensor = psi(c, w);
    for (const auto& [pair, coeff] : tensor.terms()) {
        const LinComb<Composition> sym = zeta_sh_symbol(pair.first);
        if (sym.is_zero()) continue;
        auto it = series_cache.find(pair.second);
        if (it == series_cache.end())
            it = series_cache.emplace(pair.second, g_tilde_sh(pair.second, order)).first;
        for (const auto& [u, cu] : sym.terms()) {
            QSeries f = it->second;
            f *= coeff * cu;
            out.add(u, f);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lattice sums.
// ---------------------------------------------------------------------------

namespace {

std::complex<double> cpow_neg(std::complex<double> base, int n)
{
    std::complex<double> inv = 1.0 / base;
    std::complex<double> out(1.0, 0.0);
    for (int i = 0; i < n; ++i) out *= inv;
    return out;
}

// integral of (offset + x)^{-n} over [edge, +inf) resp. (-inf, -edge]
std::complex<double> tail_integral_right(std::complex<double> offset, double edge, int n)
{
    return cpow_neg(offset + edge, n - 1) / static_cast<double>(n - 1);
}

std::complex<double> tail_integral_left(std::complex<double> offset, double edge, int n)
{
    // [(offset+x)^{1-n}/(1-n)] from -inf to -edge
    return -cpow_neg(offset - edge, n - 1) / static_cast<double>(n - 1);
}

// Prefix-growth companions to the plain integral tails: the chain prefix
// keeps accumulating previous-level mass (density ~ (offset+y)^{-nu}) inside
// the tail region.  Right side:
//   int_e^inf [int_e^x (o+y)^{-nu} dy] (o+x)^{-n} dx
// and the mirrored left-side version with the density integrated from -inf.
std::complex<double> tail_growth_right(std::complex<double> offset, double edge, int nu, int n)
{
    return (cpow_neg(offset + edge, nu - 1) * tail_integral_right(offset, edge, n) -
            tail_integral_right(offset, edge, nu + n - 1)) /
           static_cast<double>(nu - 1);
}

std::complex<double> tail_growth_left(std::complex<double> offset, double edge, int nu, int n)
{
    return -tail_integral_left(offset, edge, nu + n - 1) / static_cast<double>(nu - 1);
}

std::complex<double> lattice_eval_impl(const Composition& c, const LatticeParams& p,
                                       bool parallel)
{
    if (c.empty()) return {1.0, 0.0};
    if (!c.all_parts_at_least(2))
        throw std::invalid_argument("lattice_eval: all parts must be >= 2");
    if (c.depth() > 3) throw std::invalid_argument("lattice_eval: depth <= 3 supported");
    if (p.tau.imag() <= 0.0) throw std::invalid_argument("lattice_eval: Im(tau) > 0 required");

    const int r = c.depth();
    const int L = p.L;
    const int M = p.M;
    const int W = 2 * M + 1; // columns m = -M..M
    const double edge = M + 0.5;

    // S[l*W + (m+M)] = sum over chains of the current length ending at l tau + m
    std::vector<std::complex<double>> S(static_cast<std::size_t>((L + 1) * W));
    std::vector<std::complex<double>> rowTotal(static_cast<std::size_t>(L + 1));
    std::vector<std::complex<double>> leftCorr(static_cast<std::size_t>(L + 1));
    std::vector<std::complex<double>> cross(static_cast<std::size_t>(L + 1));
    // prefixes of the previous level at the row edges; they drive the
    // prefix-growth part of the tail correction
    std::vector<std::complex<double>> prevRight(static_cast<std::size_t>(L + 1), 1.0);
    std::vector<std::complex<double>> prevLeft(static_cast<std::size_t>(L + 1), 1.0);
    int prev_n = 0;

    const int nthreads = parallel ? thread_count() : 1;
    (void)nthreads;

    for (int level = 0; level < r; ++level) {
        const int n = c.parts[static_cast<std::size_t>(level)];

        // cross-row prefixes from the previous level's row totals
        if (level == 0) {
            std::fill(cross.begin(), cross.end(), std::complex<double>(0.0, 0.0));
        } else {
            std::complex<double> acc(0.0, 0.0);
            for (int l = 0; l <= L; ++l) {
                cross[static_cast<std::size_t>(l)] = acc;
                acc += rowTotal[static_cast<std::size_t>(l)];
            }
        }

        std::vector<std::complex<double>> newRowTotal(static_cast<std::size_t>(L + 1));
        std::vector<std::complex<double>> newLeftCorr(static_cast<std::size_t>(L + 1));
        std::vector<std::complex<double>> newRight(static_cast<std::size_t>(L + 1));
        std::vector<std::complex<double>> newLeft(static_cast<std::size_t>(L + 1));

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads) if (parallel && nthreads > 1)
#endif
        for (int l = 0; l <= L; ++l) {
            const std::size_t lu = static_cast<std::size_t>(l);
            const std::complex<double> offset = p.tau * static_cast<double>(l);
            const int m_begin = (l == 0) ? 1 : -M;
            // Chain prefix entering the row from the left: all lower rows in
            // full, plus the previous level's mass beyond the left edge of
            // this row.  At the first level the prefix is the empty chain.
            const bool first = (level == 0);
            std::complex<double> running =
                cross[lu] + ((l > 0) ? leftCorr[lu] : std::complex<double>(0.0, 0.0));
            const std::complex<double> prefix_left = first ? 1.0 : running;
            std::complex<double> total(0.0, 0.0);
            for (int m = m_begin; m <= M; ++m) {
                const std::size_t idx =
                    lu * static_cast<std::size_t>(W) + static_cast<std::size_t>(m + M);
                const std::complex<double> prev = S[idx];
                const std::complex<double> val =
                    (first ? 1.0 : running) * cpow_neg(offset + static_cast<double>(m), n);
                S[idx] = val;
                total += val;
                if (!first) running += prev;
            }
            (void)prefix_left;
            const std::complex<double> prefix_right = first ? 1.0 : running;
            const std::complex<double> prefix_far_left = first ? 1.0 : cross[lu];
            newRight[lu] = prefix_right;
            newLeft[lu] = prefix_far_left;
            if (p.tail_correction) {
                std::complex<double> right = prefix_right * tail_integral_right(offset, edge, n);
                std::complex<double> left(0.0, 0.0);
                if (l > 0) left = prefix_far_left * tail_integral_left(offset, edge, n);
                if (!first) {
                    right += prevRight[lu] * tail_growth_right(offset, edge, prev_n, n);
                    if (l > 0) left += prevLeft[lu] * tail_growth_left(offset, edge, prev_n, n);
                }
                newRowTotal[lu] = total + right + left;
                newLeftCorr[lu] = left;
            } else {
                newRowTotal[lu] = total;
                newLeftCorr[lu] = {0.0, 0.0};
            }
        }
        rowTotal = std::move(newRowTotal);
        leftCorr = std::move(newLeftCorr);
        prevRight = std::move(newRight);
        prevLeft = std::move(newLeft);
        prev_n = n;
    }

    std::complex<double> g(0.0, 0.0);
    for (int l = 0; l <= L; ++l) g += rowTotal[static_cast<std::size_t>(l)];
    return g;
}

} // namespace

std::complex<double> lattice_eval(const Composition& c, const LatticeParams& p)
{
    return lattice_eval_impl(c, p, true);
}

std::complex<double> lattice_eval_serial(const Composition& c, const LatticeParams& p)
{
    return lattice_eval_impl(c, p, false);
}

std::complex<double> psi_eval(const Composition& c, std::complex<double> tau, int cutoff)
{
    if (!c.all_parts_at_least(2))
        throw std::invalid_argument("psi_eval: all parts must be >= 2");
    if (tau.imag() <= 0.0) throw std::invalid_argument("psi_eval: Im(tau) > 0 required");
    const int r = c.depth();
    if (r == 0) return {1.0, 0.0};
    const int C = cutoff;
    const double edge = C + 0.5;

    std::vector<std::complex<double>> S(static_cast<std::size_t>(2 * C + 1));
    std::complex<double> leftTail(0.0, 0.0);
    std::complex<double> rightTail(0.0, 0.0);
    std::complex<double> total(0.0, 0.0);

    for (int level = 0; level < r; ++level) {
        const int n = c.parts[static_cast<std::size_t>(level)];
        const bool first = (level == 0);
        std::complex<double> running = first ? 0.0 : leftTail;
        const std::complex<double> prefix_left = first ? 1.0 : running;
        total = {0.0, 0.0};
        for (int m = -C; m <= C; ++m) {
            const std::size_t idx = static_cast<std::size_t>(m + C);
            const std::complex<double> prev = S[idx];
            const std::complex<double> val =
                (first ? 1.0 : running) * cpow_neg(tau + static_cast<double>(m), n);
            S[idx] = val;
            total += val;
            if (!first) running += prev;
        }
        const std::complex<double> prefix_right = first ? 1.0 : running;
        leftTail = prefix_left * tail_integral_left(tau, edge, n);
        rightTail = prefix_right * tail_integral_right(tau, edge, n);
        total += leftTail + rightTail;
        // the right tail of an intermediate level would feed positions beyond
        // the cutoff of the next level; it enters `total` only.
    }
    return total;
}

bool check_vanishing(const Composition& c, double tol)
{
    if (!c.all_parts_at_least(2))
        throw std::invalid_argument("check_vanishing: all parts must be >= 2");
    if (c.weight() > 8 || c.depth() > 3)
        throw std::domain_error("check_vanishing: weight <= 8, depth <= 3 supported");
    const int r = c.depth();
    if (r <= 1) return true;

    const int N = c.weight();
    std::complex<double> total(0.0, 0.0);
    std::vector<int> k(static_cast<std::size_t>(r));

    std::function<void(int, int)> rec = [&](int j, int rest) {
        if (j == r) {
            if (rest != 0) return;
            for (int q = 0; q < r; ++q) {
                if (k[static_cast<std::size_t>(q)] != 1) continue;
                Integer coeff(1);
                for (int i = 0; i < r && coeff != 0; ++i)
                    if (i != q)
                        coeff *= binomial(k[static_cast<std::size_t>(i)] - 1,
                                          c.parts[static_cast<std::size_t>(i)] - 1);
                if (coeff == 0) continue;
                long expo = c.parts[static_cast<std::size_t>(q)];
                for (int i = q + 1; i < r; ++i) expo += k[static_cast<std::size_t>(i)];
                if (expo % 2) coeff = -coeff;

                Composition dec; // k_{q-1},...,k_1
                for (int i = q - 1; i >= 0; --i) dec.parts.push_back(k[static_cast<std::size_t>(i)]);
                Composition inc; // k_{q+1},...,k_r
                for (int i = q + 1; i < r; ++i) inc.parts.push_back(k[static_cast<std::size_t>(i)]);
                total += coeff.get_d() * mzv_eval(dec, 1e-12).value * mzv_eval(inc, 1e-12).value;
            }
            return;
        }
        for (int v = 1; v <= rest - (r - 1 - j); ++v) {
            k[static_cast<std::size_t>(j)] = v;
            rec(j + 1, rest - v);
        }
    };
    rec(0, N);
    return std::abs(total) <= tol;
}

NumericSeries numeric_eval(const MzvQTensor& t, double tol)
{
    NumericSeries out;
    out.coeff.assign(static_cast<std::size_t>(t.order) + 1, {0.0, 0.0});
    out.err.assign(static_cast<std::size_t>(t.order) + 1, 0.0);
    for (const auto& [u, f] : t.terms) {
        const MzvValue zv = zeta_tilde_eval(u, tol);
        for (int n = 0; n <= t.order; ++n) {
            const double x = f.coeff(n).get_d();
            if (x == 0.0) continue;
            out.coeff[static_cast<std::size_t>(n)] += x * zv.value;
            out.err[static_cast<std::size_t>(n)] +=
                std::abs(x) * zv.abs_error + 1e-16 * std::abs(x * std::abs(zv.value));
        }
    }
    return out;
}

std::complex<double> eval_at_tau(const MzvQTensor& t, std::complex<double> tau, double tol)
{
    const NumericSeries ns = numeric_eval(t, tol);
    const std::complex<double> q =
        std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi) * tau);
    std::complex<double> total(0.0, 0.0);
    std::complex<double> qp(1.0, 0.0);
    for (std::size_t n = 0; n < ns.coeff.size(); ++n) {
        total += ns.coeff[n] * qp;
        qp *= q;
    }
    return total;
}

std::string to_string(const MzvQTensor& t)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [u, f] : t.terms) {
        if (!first) os << "\n";
        os << "zeta~" << to_string(u) << " * [" << to_string(f) << "]";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace mes
