#pragma once

#include "mes/composition.hpp"
#include "mes/divisor.hpp"
#include "mes/eisenstein.hpp"
#include "mes/lincomb.hpp"

#include <vector>

namespace mes {

// Harmonic-minus-shuffle relation attached to a pair of indices with all
// parts >= 2; the coefficients state  sum a_w G~sh_w = 0.
struct RelationVector {
    int weight = 0;
    LinComb<Composition> coeffs;
    Composition lhs, rhs; // generating pair
};

RelationVector double_shuffle_relation(const Composition& w1, const Composition& w2);

// All generating pairs (unordered) of a given total weight.
std::vector<RelationVector> relations_of_weight(int weight);

struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries; // row-major

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), entries(r * c, Rational(0))
    {
    }
    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// Exact rank over Q: denominators cleared per row, then fraction-free
// (Bareiss) elimination over arbitrary-precision integers.
int rational_rank(const RationalMatrix& m);

// Number of linearly independent relation vectors per weight N = 0..N_max.
std::vector<int> relation_count_table(int N_max);

// dim Q^(N)/Q^(N-1) for N = 2..N_max from exact ranks of stacked
// q-coefficient vectors (orders 1..M) of all admissible shuffle-regularized
// series of weight <= N.  Throws when the rank has not stabilized between
// orders M-10 and M.
std::vector<int> q_dimension_table(int N_max, int M, const Budget& budget = {});

enum class VerifyStatus { ExactVerified, NumericVerified, Failed };

// Push the relation through the regularized Eisenstein assembly and test
// that the combination vanishes: exactly when every symbol has a known
// rational value, numerically otherwise.
VerifyStatus verify_relation_exact(const RelationVector& v, int order, double tol = 1e-8);

// d G~sh_N = 2N (G~sh_{N+2} - sum_{i=1}^{N} G~sh_{i,N+2-i}), checked
// numerically coefficient-by-coefficient through q^order.
bool verify_derivative_formula(int N, int order, double tol);

const char* to_string(VerifyStatus s);

} // namespace mes
