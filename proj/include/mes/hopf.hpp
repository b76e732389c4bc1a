#pragma once

#include "mes/composition.hpp"
#include "mes/lincomb.hpp"
#include "mes/words.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace mes {

// I(left; a1,...,aN; right) with letters in {0,1}, an element of the quotient
// algebra in which I(0;0;1) has been killed.
struct IntegralSymbol {
    int left = 0;
    BinaryWord word;
    int right = 1;
};

// Expansion of a symbol in the canonical basis I(n1,...,nr):
//  - empty word: the unit,
//  - equal endpoints or all-zero word: 0,
//  - endpoints (1,0): path reversal with sign (-1)^N first,
//  - leading zeros: binomial pushdown onto the basis.
LinComb<Composition> reduce(const IntegralSymbol& s);

// b^k_{n,n'} = (-1)^n C(k-1,n-1) + (-1)^{k-n'} C(k-1,n'-1).
Rational b_coefficient(int n, int nprime, int k);

using CompositionPair = std::pair<Composition, Composition>;
using TensorLinComb = LinComb<CompositionPair>;

// Goncharov coproduct of a canonical basis element, expanded in the canonical
// tensor basis.  Marked-subset enumeration over the 2^N subsets of letter
// positions; left-factor segments are reduced and multiplied by the shuffle
// product.
TensorLinComb coproduct(const Composition& c);
TensorLinComb coproduct_serial(const Composition& c);

// Componentwise product on tensors, both slots via the shuffle product.
TensorLinComb tensor_mul(const TensorLinComb& a, const TensorLinComb& b);

// Linear extension of the coproduct.
TensorLinComb coproduct(const LinComb<Composition>& lc);

// The marker-word class of the coproduct attached to one xy-word:
// enumerates exactly the subsets whose marked 1-positions match the y's of w.
// Valid for any parts >= 1; |w| must equal the depth of c.
TensorLinComb psi_enumerative(const Composition& c, const XYWord& w);

// Closed form of the same class as a (q,k)-indexed multiple sum; stated for
// all parts >= 2.
TensorLinComb psi(const Composition& c, const XYWord& w);

// Shared (q,k) enumeration behind the closed form of psi and the Fourier
// expansion.  For each choice of q_m in [t_m, t_{m+1}-1] and of k_j >= k_min
// (j = t_1..r) with the block-sum constraints, the callback receives the
// integer coefficient sign * prod binom, the list of left factor indices
// (descending and ascending runs around each q_m, empty runs dropped) and the
// right index (k_{q_1},...,k_{q_h}).
using MarkerTermFn =
    std::function<void(const Integer& coeff, const std::vector<Composition>& left_factors,
                       const Composition& right)>;
void enumerate_marker_terms(const Composition& c, const std::vector<int>& t_set, int k_min,
                            const MarkerTermFn& fn);

} // namespace mes
