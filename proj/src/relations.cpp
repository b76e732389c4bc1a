#include "mes/relations.hpp"

#include "mes/mzv.hpp"
#include "mes/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace mes {

RelationVector double_shuffle_relation(const Composition& w1, const Composition& w2)
{
    if (!w1.all_parts_at_least(2) || !w2.all_parts_at_least(2) || w1.empty() || w2.empty())
        throw std::invalid_argument("double_shuffle_relation: parts must be >= 2");
    RelationVector v;
    v.weight = w1.weight() + w2.weight();
    v.lhs = w1;
    v.rhs = w2;
    v.coeffs = harmonic(w1, w2);
    v.coeffs -= shuffle_compositions(w1, w2);
    return v;
}

std::vector<RelationVector> relations_of_weight(int weight)
{
    std::vector<RelationVector> out;
    for (int a = 2; a + 2 <= weight; ++a) {
        const int b = weight - a;
        if (a > b) break;
        const auto left = compositions_of_weight(a, 2);
        const auto right = compositions_of_weight(b, 2);
        for (std::size_t i = 0; i < left.size(); ++i) {
            for (std::size_t j = (a == b ? i : 0); j < right.size(); ++j)
                out.push_back(double_shuffle_relation(left[i], right[j]));
        }
    }
    return out;
}

int rational_rank(const RationalMatrix& m)
{
    if (m.rows == 0 || m.cols == 0) return 0;
    // clear denominators rowwise
    std::vector<std::vector<Integer>> a(m.rows, std::vector<Integer>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < m.cols; ++j) {
            const Integer den = m.at(i, j).get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            l = l / g * den;
        }
        for (std::size_t j = 0; j < m.cols; ++j) {
            Rational v = m.at(i, j) * Rational(l);
            a[i][j] = v.get_num(); // denominator is 1 now
        }
    }

    std::size_t rank = 0;
    Integer prev(1);
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            for (std::size_t j = col + 1; j < m.cols; ++j) {
                Integer t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<int> relation_count_table(int N_max)
{
    if (N_max > 12) throw std::invalid_argument("relation_count_table: N_max <= 12");
    std::vector<int> out;
    for (int N = 0; N <= N_max; ++N) {
        const auto rels = relations_of_weight(N);
        if (rels.empty()) {
            out.push_back(0);
            continue;
        }
        const auto basis = compositions_of_weight(N);
        std::map<Composition, std::size_t> col;
        for (std::size_t j = 0; j < basis.size(); ++j) col[basis[j]] = j;
        RationalMatrix mat(rels.size(), basis.size());
        for (std::size_t i = 0; i < rels.size(); ++i)
            for (const auto& [c, x] : rels[i].coeffs.terms()) mat.at(i, col.at(c)) = x;
        out.push_back(rational_rank(mat));
    }
    return out;
}

static int rank_of_series(const std::vector<QSeries>& series, int order)
{
    if (series.empty()) return 0;
    RationalMatrix mat(series.size(), static_cast<std::size_t>(order));
    for (std::size_t i = 0; i < series.size(); ++i)
        for (int n = 1; n <= order; ++n) mat.at(i, static_cast<std::size_t>(n - 1)) = series[i].coeff(n);
    return rational_rank(mat);
}

std::vector<int> q_dimension_table(int N_max, int M, const Budget& budget)
{
    if (N_max < 2) throw std::invalid_argument("q_dimension_table: N_max >= 2");
    if (M <= 10) throw std::invalid_argument("q_dimension_table: order must exceed 10");

    std::vector<QSeries> series;
    std::vector<int> dims;
    int prev_rank = 0;
    for (int N = 2; N <= N_max; ++N) {
        for (const auto& c : admissible_compositions_of_weight(N))
            series.push_back(g_tilde_sh(c, M, budget));
        const int r_full = rank_of_series(series, M);
        const int r_check = rank_of_series(series, M - 10);
        if (r_full != r_check)
            throw std::runtime_error("q_dimension_table: rank not stabilized at order " +
                                     std::to_string(M));
        dims.push_back(r_full - prev_rank);
        prev_rank = r_full;
    }
    return dims;
}

VerifyStatus verify_relation_exact(const RelationVector& v, int order, double tol)
{
    MzvQTensor total;
    total.order = order;
    for (const auto& [w, a] : v.coeffs.terms()) {
        MzvQTensor t = mes_sh(w, order);
        t *= a;
        total += t;
    }
    MzvQTensor reduced = reduce_known_constants(total);

    bool exact_mode = true;
    for (const auto& [u, f] : reduced.terms)
        if (!u.empty()) exact_mode = false;

    if (exact_mode) {
        for (const auto& [u, f] : reduced.terms)
            if (!f.is_zero()) return VerifyStatus::Failed;
        return VerifyStatus::ExactVerified;
    }

    const NumericSeries ns = numeric_eval(total, 1e-11);
    for (const auto& cf : ns.coeff)
        if (std::abs(cf) > tol) return VerifyStatus::Failed;
    return VerifyStatus::NumericVerified;
}

bool verify_derivative_formula(int N, int order, double tol)
{
    if (N < 1) throw std::invalid_argument("verify_derivative_formula: N >= 1");
    MzvQTensor lhs = apply_q_derivative(mes_sh(Composition{N}, order));

    MzvQTensor rhs = mes_sh(Composition{N + 2}, order);
    for (int i = 1; i <= N; ++i) rhs -= mes_sh(Composition{i, N + 2 - i}, order);
    rhs *= Rational(2 * N);

    MzvQTensor diff = lhs;
    diff -= rhs;
    const NumericSeries ns = numeric_eval(diff, 1e-11);
    for (const auto& cf : ns.coeff)
        if (std::abs(cf) > tol) return false;
    return true;
}

const char* to_string(VerifyStatus s)
{
    switch (s) {
    case VerifyStatus::ExactVerified: return "exact-verified";
    case VerifyStatus::NumericVerified: return "numerically-verified";
    default: return "failed";
    }
}

} // namespace mes
