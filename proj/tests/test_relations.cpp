#include "mes/relations.hpp"

#include "mes/words.hpp"

#include <doctest.h>
#include <random>

using namespace mes;

TEST_CASE("double shuffle relation vectors")
{
    const RelationVector v22 = double_shuffle_relation(Composition{2}, Composition{2});
    CHECK(v22.weight == 4);
    CHECK(v22.coeffs.coeff(Composition{4}) == 1);
    CHECK(v22.coeffs.coeff(Composition{1, 3}) == -4);
    CHECK(v22.coeffs.size() == 2);

    const RelationVector v23 = double_shuffle_relation(Composition{2}, Composition{3});
    CHECK(v23.coeffs.coeff(Composition{5}) == 1);
    CHECK(v23.coeffs.coeff(Composition{2, 3}) == -2);
    CHECK(v23.coeffs.coeff(Composition{1, 4}) == -6);
    CHECK(v23.coeffs.size() == 3);

    CHECK(double_shuffle_relation(Composition{3}, Composition{2}).coeffs == v23.coeffs);
    CHECK_THROWS_AS(double_shuffle_relation(Composition{1, 2}, Composition{2}),
                    std::invalid_argument);

    for (const auto& v : relations_of_weight(9))
        for (const auto& [c, x] : v.coeffs.terms()) CHECK(c.weight() == 9);
}

TEST_CASE("exact rank: known values and invariance properties")
{
    RationalMatrix id3(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(rational_rank(id3) == 3);

    RationalMatrix sing(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) sing.at(i, j) = ratio(static_cast<long>(i + j));
    CHECK(rational_rank(sing) == 2);

    CHECK(rational_rank(RationalMatrix{}) == 0);

    std::mt19937 rng(73);
    std::uniform_int_distribution<int> val(-4, 4), den(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix m(5, 7);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j) m.at(i, j) = ratio(val(rng), den(rng));
        const int r = rational_rank(m);

        // invariance under row permutation and nonzero row scaling
        RationalMatrix shuffled = m;
        std::vector<std::size_t> perm{4, 2, 0, 3, 1};
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j) shuffled.at(i, j) = m.at(perm[i], j);
        const Rational scales[5] = {ratio(3), ratio(-1, 2), ratio(7, 5), ratio(1), ratio(-9)};
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j) shuffled.at(i, j) *= scales[i];
        CHECK(rational_rank(shuffled) == r);

        // appending a linear combination of rows leaves the rank unchanged
        RationalMatrix extended(6, 7);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j) extended.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < 7; ++j)
            extended.at(5, j) = m.at(0, j) * ratio(2) - m.at(3, j) * ratio(1, 3);
        CHECK(rational_rank(extended) == r);
    }
}

TEST_CASE("relation counts, small range")
{
    const std::vector<int> counts = relation_count_table(7);
    CHECK(counts == std::vector<int>{0, 0, 0, 0, 1, 1, 3, 5});
}

TEST_CASE("dimension table, small range")
{
    const std::vector<int> dims = q_dimension_table(5, 30);
    CHECK(dims == std::vector<int>{1, 2, 3, 6});
    // ranks have stabilized: a larger order reports the same dimensions
    CHECK(q_dimension_table(5, 40) == dims);
}

TEST_CASE("relation verification")
{
    // Eq. (4.6) instance: fully rational constants, exact mode
    const RelationVector v22 = double_shuffle_relation(Composition{2}, Composition{2});
    CHECK(verify_relation_exact(v22, 40) == VerifyStatus::ExactVerified);

    // weight 5: odd-weight constants force numeric mode
    const RelationVector v23 = double_shuffle_relation(Composition{2}, Composition{3});
    CHECK(verify_relation_exact(v23, 30) == VerifyStatus::NumericVerified);

    // the zero vector verifies trivially
    RelationVector zero;
    zero.weight = 4;
    CHECK(verify_relation_exact(zero, 20) == VerifyStatus::ExactVerified);

    // a perturbed vector must fail
    RelationVector bad = v22;
    bad.coeffs.add(Composition{4}, ratio(1, 7));
    CHECK(verify_relation_exact(bad, 20) == VerifyStatus::Failed);

    // every generated relation of weight <= 6 vanishes numerically at q=e^{-2pi}
    for (int w = 4; w <= 6; ++w)
        for (const auto& v : relations_of_weight(w)) {
            MzvQTensor total;
            total.order = 20;
            for (const auto& [idx, a] : v.coeffs.terms()) {
                MzvQTensor t = mes_sh(idx, 20);
                t *= a;
                total += t;
            }
            const std::complex<double> at_i = eval_at_tau(total, {0.0, 1.0}, 1e-11);
            CHECK(std::abs(at_i) < 1e-6);
        }
}

TEST_CASE("derivative formula, first instance")
{
    CHECK(verify_derivative_formula(1, 12, 1e-8));
}
