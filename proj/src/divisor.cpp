#include "mes/divisor.hpp"

#include "mes/rational.hpp"
#include "mes/runtime.hpp"
#include "mes/words.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mes {

Integer multiple_divisor_sum(const Composition& c, int n)
{
    if (!c.all_parts_at_least(1)) throw std::invalid_argument("multiple_divisor_sum: parts >= 1");
    const int r = c.depth();
    if (r == 0) return Integer(n == 0 ? 1 : 0);
    Integer total(0);
    // DFS over 0 < u_1 < ... < u_r and v_j >= 1 with sum u_j v_j = n.
    std::function<void(int, int, int, const Integer&)> rec =
        [&](int level, int u_prev, int rest, const Integer& prod) {
            if (level == r) {
                if (rest == 0) total += prod;
                return;
            }
            for (int u = u_prev + 1; u * (r - level) <= rest; ++u) {
                // remaining levels need at least u+1, u+2, ...; cheap lower bound u each
                for (int v = 1; u * v <= rest; ++v) {
                    Integer p = prod * int_pow(Integer(v),
                                               static_cast<unsigned long>(c.parts[level] - 1));
                    rec(level + 1, u, rest - u * v, p);
                }
            }
        };
    rec(0, 0, n, Integer(1));
    return total;
}

QSeries g_tilde(const Composition& c, int order)
{
    const int r = c.depth();
    QSeries out(order);
    if (r == 0) {
        out.set_coeff(0, Rational(1));
        return out;
    }
    Integer den(1);
    for (int p : c.parts) den *= factorial(static_cast<unsigned long>(p - 1));

    // DFS over u-tuples sharing prefix products of the blocks
    // (q^u/(1-q^u))^{n_j} weighted by v^{n_j-1}.
    std::vector<Integer> acc(static_cast<std::size_t>(order) + 1, Integer(0));
    std::vector<Integer> start(static_cast<std::size_t>(order) + 1, Integer(0));
    start[0] = 1;
    std::function<void(int, int, int, const std::vector<Integer>&)> rec =
        [&](int level, int u_prev, int min_order, const std::vector<Integer>& prod) {
            if (level == r) {
                for (int n = min_order; n <= order; ++n) acc[static_cast<std::size_t>(n)] += prod[static_cast<std::size_t>(n)];
                return;
            }
            const int e = c.parts[level] - 1;
            for (int u = u_prev + 1; min_order + u <= order; ++u) {
                std::vector<Integer> next(static_cast<std::size_t>(order) + 1, Integer(0));
                bool any = false;
                for (int v = 1; ; ++v) {
                    const int off = u * v;
                    if (min_order + off > order) break;
                    const Integer w = int_pow(Integer(v), static_cast<unsigned long>(e));
                    for (int n = min_order; n + off <= order; ++n) {
                        const Integer& src = prod[static_cast<std::size_t>(n)];
                        if (src != 0) {
                            next[static_cast<std::size_t>(n + off)] += src * w;
                            any = true;
                        }
                    }
                }
                if (any) rec(level + 1, u, min_order + u, next);
            }
        };
    rec(0, 0, 0, start);
    for (int n = 0; n <= order; ++n)
        out.set_coeff(n, ratio(acc[static_cast<std::size_t>(n)], den));
    return out;
}

void MultiSeries::add_term(const std::vector<int>& exps, const QSeries& s)
{
    auto [it, inserted] = coeffs.emplace(exps, s.truncated(order));
    if (!inserted) it->second += s;
    if (it->second.is_zero()) coeffs.erase(it);
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o)
{
    max_degree = std::min(max_degree, o.max_degree);
    order = std::min(order, o.order);
    for (const auto& [e, s] : o.coeffs) add_term(e, s);
    return *this;
}

MultiSeries& MultiSeries::operator*=(const Rational& s)
{
    if (is_zero(s)) {
        coeffs.clear();
        return *this;
    }
    for (auto& [e, q] : coeffs) q *= s;
    return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b)
{
    MultiSeries out;
    out.nvars = std::max(a.nvars, b.nvars);
    out.max_degree = std::min(a.max_degree, b.max_degree);
    out.order = std::min(a.order, b.order);
    for (const auto& [ea, sa] : a.coeffs) {
        int da = 0;
        for (int e : ea) da += e;
        for (const auto& [eb, sb] : b.coeffs) {
            int db = 0;
            for (int e : eb) db += e;
            if (da + db > out.max_degree) continue;
            std::vector<int> e(static_cast<std::size_t>(out.nvars), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(e, sa * sb);
        }
    }
    return out;
}

const QSeries* MultiSeries::find(const std::vector<int>& exps) const
{
    auto it = coeffs.find(exps);
    return it == coeffs.end() ? nullptr : &it->second;
}

QSeries MultiSeries::coefficient(const std::vector<int>& exps) const
{
    if (const QSeries* s = find(exps)) return *s;
    return QSeries(order);
}

bool MultiSeries::operator==(const MultiSeries& o) const
{
    return nvars == o.nvars && max_degree == o.max_degree && order == o.order &&
           coeffs == o.coeffs;
}

// exp(u * form) truncated at total degree max_degree, as a q-free multiseries.
static MultiSeries exp_of_form(long u, const LinearForm& form, int nvars, int max_degree,
                               int order)
{
    MultiSeries out;
    out.nvars = nvars;
    out.max_degree = max_degree;
    out.order = order;
    out.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), QSeries::one(order));
    for (int i = 0; i < nvars; ++i) {
        if (is_zero(form[static_cast<std::size_t>(i)])) continue;
        MultiSeries factor;
        factor.nvars = nvars;
        factor.max_degree = max_degree;
        factor.order = order;
        Rational coeff(1);
        const Rational base = Rational(u) * form[static_cast<std::size_t>(i)];
        for (int d = 0; d <= max_degree; ++d) {
            std::vector<int> e(static_cast<std::size_t>(nvars), 0);
            e[static_cast<std::size_t>(i)] = d;
            QSeries s(order);
            s.set_coeff(0, coeff);
            factor.add_term(e, s);
            coeff *= base;
            coeff /= (d + 1);
        }
        out = out * factor;
    }
    return out;
}

// (q^u / (1-q^u))^n truncated.
static QSeries q_block(int u, int n, int order)
{
    QSeries s(order);
    for (int v = n; u * v <= order; ++v)
        s.set_coeff(u * v, Rational(binomial(v - 1, n - 1)));
    return s;
}

MultiSeries h_series(const std::vector<int>& n, const std::vector<LinearForm>& forms, int nvars,
                     int max_degree, int order, const Budget& budget)
{
    const int m = static_cast<int>(n.size());
    if (m != static_cast<int>(forms.size()))
        throw std::invalid_argument("h_series: index/form length mismatch");
    if (order > budget.max_order || m > budget.max_depth)
        throw BudgetError("h_series: budget exceeded");

    MultiSeries out;
    out.nvars = nvars;
    out.max_degree = max_degree;
    out.order = order;

    MultiSeries unit = out;
    unit.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), QSeries::one(order));

    std::function<void(int, int, int, const MultiSeries&)> rec =
        [&](int level, int u_prev, int min_order, const MultiSeries& prod) {
            if (level == m) {
                out += prod;
                return;
            }
            for (int u = u_prev + 1; min_order + u * n[static_cast<std::size_t>(level)] <= order;
                 ++u) {
                MultiSeries factor =
                    exp_of_form(u, forms[static_cast<std::size_t>(level)], nvars, max_degree,
                                order);
                QSeries qb = q_block(u, n[static_cast<std::size_t>(level)], order);
                MultiSeries term = prod * factor;
                for (auto& [e, s] : term.coeffs) s = s * qb;
                rec(level + 1, u, min_order + u * n[static_cast<std::size_t>(level)], term);
            }
        };
    rec(0, 0, 0, unit);
    return out;
}

// The y-blocks of Hoffman's exponential applied to argument forms z_1..z_r:
// block j of the composition (i_1..i_m) covers consecutive z's and receives
// their sum.
static std::vector<LinearForm> block_forms(const std::vector<int>& icomp,
                                           const std::vector<LinearForm>& z, int nvars)
{
    std::vector<LinearForm> out;
    std::size_t pos = 0;
    for (int len : icomp) {
        LinearForm f(static_cast<std::size_t>(nvars), Rational(0));
        for (int t = 0; t < len; ++t, ++pos)
            for (int i = 0; i < nvars; ++i)
                f[static_cast<std::size_t>(i)] += z[pos][static_cast<std::size_t>(i)];
        out.push_back(std::move(f));
    }
    return out;
}

static MultiSeries h_on_forms(int r, const std::vector<LinearForm>& z, int nvars, int max_degree,
                              int order, const Budget& budget)
{
    MultiSeries out;
    out.nvars = nvars;
    out.max_degree = max_degree;
    out.order = order;
    for (const auto& icomp : compositions_of_weight(r)) {
        Integer den(1);
        for (int p : icomp.parts) den *= factorial(static_cast<unsigned long>(p));
        MultiSeries part = h_series(std::vector<int>(icomp.parts.begin(), icomp.parts.end()),
                                    block_forms(icomp.parts, z, nvars), nvars, max_degree, order,
                                    budget);
        part *= ratio(Integer(1), den);
        out += part;
    }
    return out;
}

static LinearForm unit_form(int i, int nvars) // x_{i+1}
{
    LinearForm f(static_cast<std::size_t>(nvars), Rational(0));
    f[static_cast<std::size_t>(i)] = 1;
    return f;
}

MultiSeries h_truncated(int r, int max_degree, int order, const Budget& budget)
{
    std::vector<LinearForm> z;
    for (int t = 0; t < r; ++t) z.push_back(unit_form(t, r));
    return h_on_forms(r, z, r, max_degree, order, budget);
}

// difference forms (x_r-x_{r-1}, ..., x_2-x_1, x_1)
static std::vector<LinearForm> difference_forms(int r)
{
    std::vector<LinearForm> z;
    for (int t = 0; t < r; ++t) {
        LinearForm f(static_cast<std::size_t>(r), Rational(0));
        const int hi = r - t;     // x_{hi}
        const int lo = r - t - 1; // minus x_{lo}, absent for the last slot
        f[static_cast<std::size_t>(hi - 1)] = 1;
        if (lo >= 1) f[static_cast<std::size_t>(lo - 1)] = -1;
        z.push_back(std::move(f));
    }
    return z;
}

MultiSeries g_sh_series(int r, int max_degree, int order, const Budget& budget)
{
    return h_on_forms(r, difference_forms(r), r, max_degree, order, budget);
}

MultiSeries g_sh_series_primed(int r, int max_degree, int order, const Budget& budget)
{
    // primed blocks: y'_j = x_{r - T_{j-1}} - x_{r - T_j} with T the prefix
    // sums of the composition and x_0 = 0.
    MultiSeries out;
    out.nvars = r;
    out.max_degree = max_degree;
    out.order = order;
    for (const auto& icomp : compositions_of_weight(r)) {
        Integer den(1);
        for (int p : icomp.parts) den *= factorial(static_cast<unsigned long>(p));
        std::vector<LinearForm> forms;
        int prefix = 0;
        for (int p : icomp.parts) {
            LinearForm f(static_cast<std::size_t>(r), Rational(0));
            const int hi = r - prefix;
            const int lo = r - prefix - p;
            f[static_cast<std::size_t>(hi - 1)] = 1;
            if (lo >= 1) f[static_cast<std::size_t>(lo - 1)] = -1;
            forms.push_back(std::move(f));
            prefix += p;
        }
        MultiSeries part =
            h_series(std::vector<int>(icomp.parts.begin(), icomp.parts.end()), forms, r,
                     max_degree, order, budget);
        part *= ratio(Integer(1), den);
        out += part;
    }
    return out;
}

namespace {

// One Hoffman block pattern for the direct coefficient kernel: position list
// p_j = r - T_{j-1} (1-based into the index), exponent e_j = n_{p_j} - 1.
struct BlockPattern {
    std::vector<int> sizes;     // i_1..i_m
    std::vector<int> exponents; // e_0..e_{m-1}, exponent paired with u_{j+1}-u_j
    Integer denominator;        // prod i_j! * prod (n_{p_j}-1)!
};

bool make_pattern(const Composition& c, const std::vector<int>& icomp, BlockPattern& out)
{
    const int r = c.depth();
    const int m = static_cast<int>(icomp.size());
    std::vector<bool> boundary(static_cast<std::size_t>(r) + 1, false);
    out.sizes = icomp;
    out.exponents.assign(static_cast<std::size_t>(m), 0);
    out.denominator = 1;
    int prefix = 0;
    for (int j = 0; j < m; ++j) {
        const int p = r - prefix; // 1-based position served by u_{j+1}-u_j
        boundary[static_cast<std::size_t>(p)] = true;
        out.exponents[static_cast<std::size_t>(j)] = c.parts[static_cast<std::size_t>(p - 1)] - 1;
        out.denominator *=
            factorial(static_cast<unsigned long>(c.parts[static_cast<std::size_t>(p - 1)] - 1));
        out.denominator *= factorial(static_cast<unsigned long>(icomp[static_cast<std::size_t>(j)]));
        prefix += icomp[static_cast<std::size_t>(j)];
    }
    for (int i = 1; i <= r; ++i)
        if (!boundary[static_cast<std::size_t>(i)] && c.parts[static_cast<std::size_t>(i - 1)] != 1)
            return false; // a part >= 2 off the block boundaries kills the term
    return true;
}

// DFS over 0 < u_1 < ... < u_m with sum u_j i_j <= order, accumulating
// weight * q-block product into acc.
void pattern_accumulate(const BlockPattern& pat, int order, int start_level, int first_u,
                        std::vector<Integer>& acc)
{
    const int m = static_cast<int>(pat.sizes.size());
    std::vector<Integer> base(static_cast<std::size_t>(order) + 1, Integer(0));
    base[0] = 1;

    std::function<void(int, int, int, const std::vector<Integer>&, const Integer&)> rec =
        [&](int level, int u_prev, int min_order, const std::vector<Integer>& prod,
            const Integer& weight) {
            if (level == m) {
                for (int n = min_order; n <= order; ++n)
                    acc[static_cast<std::size_t>(n)] += weight * prod[static_cast<std::size_t>(n)];
                return;
            }
            const int i = pat.sizes[static_cast<std::size_t>(level)];
            const int e = pat.exponents[static_cast<std::size_t>(level)];
            const int u_lo = (level == start_level && first_u > 0) ? first_u : u_prev + 1;
            const int u_hi = (level == start_level && first_u > 0) ? first_u : order;
            for (int u = u_lo; u <= u_hi && min_order + u * i <= order; ++u) {
                Integer w = weight * int_pow(Integer(u - u_prev), static_cast<unsigned long>(e));
                if (w == 0) continue;
                std::vector<Integer> next(static_cast<std::size_t>(order) + 1, Integer(0));
                for (int v = i; u * v <= order; ++v) {
                    const Integer b = binomial(v - 1, i - 1);
                    const int off = u * v;
                    for (int n = min_order; n + off <= order; ++n) {
                        const Integer& src = prod[static_cast<std::size_t>(n)];
                        if (src != 0) next[static_cast<std::size_t>(n + off)] += src * b;
                    }
                }
                rec(level + 1, u, min_order + u * i, next, w);
            }
        };
    rec(0, 0, 0, base, Integer(1));
}

QSeries g_tilde_sh_impl(const Composition& c, int order, const Budget& budget, bool parallel)
{
    if (!c.all_parts_at_least(1)) throw std::invalid_argument("g_tilde_sh: parts >= 1");
    if (c.depth() > budget.max_depth || c.weight() > budget.max_weight ||
        order > budget.max_order)
        throw BudgetError("g_tilde_sh: budget exceeded");

    const int r = c.depth();
    QSeries out(order);
    if (r == 0) {
        out.set_coeff(0, Rational(1));
        return out;
    }

    std::vector<BlockPattern> patterns;
    for (const auto& icomp : compositions_of_weight(r)) {
        BlockPattern pat;
        if (make_pattern(c, icomp.parts, pat)) patterns.push_back(std::move(pat));
    }

#ifdef _OPENMP
    if (parallel && thread_count() > 1) {
        // split on (pattern, u_1)
        struct Task {
            const BlockPattern* pat;
            int u1;
        };
        std::vector<Task> tasks;
        for (const auto& pat : patterns) {
            int weight_per_u = 0;
            for (int i : pat.sizes) weight_per_u += i; // min growth per u_1 step
            (void)weight_per_u;
            for (int u1 = 1; u1 * pat.sizes[0] <= order; ++u1) tasks.push_back({&pat, u1});
        }
#pragma omp parallel num_threads(thread_count())
        {
            QSeries local(order);
#pragma omp for schedule(dynamic)
            for (long ti = 0; ti < static_cast<long>(tasks.size()); ++ti) {
                std::vector<Integer> acc(static_cast<std::size_t>(order) + 1, Integer(0));
                pattern_accumulate(*tasks[static_cast<std::size_t>(ti)].pat, order, 0,
                                   tasks[static_cast<std::size_t>(ti)].u1, acc);
                for (int n = 0; n <= order; ++n)
                    local.add_coeff(n, ratio(acc[static_cast<std::size_t>(n)],
                                             tasks[static_cast<std::size_t>(ti)].pat->denominator));
            }
#pragma omp critical
            out += local;
        }
        return out;
    }
#else
    (void)parallel;
#endif

    for (const auto& pat : patterns) {
        std::vector<Integer> acc(static_cast<std::size_t>(order) + 1, Integer(0));
        pattern_accumulate(pat, order, -1, 0, acc);
        for (int n = 0; n <= order; ++n)
            out.add_coeff(n, ratio(acc[static_cast<std::size_t>(n)], pat.denominator));
    }
    return out;
}

} // namespace

QSeries g_tilde_sh(const Composition& c, int order, const Budget& budget)
{
    return g_tilde_sh_impl(c, order, budget, true);
}

QSeries g_tilde_sh_serial(const Composition& c, int order, const Budget& budget)
{
    return g_tilde_sh_impl(c, order, budget, false);
}

} // namespace mes
