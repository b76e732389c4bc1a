#pragma once

#include "mes/composition.hpp"
#include "mes/lincomb.hpp"

namespace mes {

// Shuffle product of binary words: u w sh v w' = u(w sh v w') + v(u w sh w').
// The total coefficient mass equals binomial(|w1|+|w2|, |w1|).
LinComb<BinaryWord> shuffle(const BinaryWord& w1, const BinaryWord& w2);
LinComb<BinaryWord> shuffle(const LinComb<BinaryWord>& a, const LinComb<BinaryWord>& b);

// Shuffle product expressed on composition indices (both factors and all
// resulting words are monomials of the 1-generated algebra).
LinComb<Composition> shuffle_compositions(const Composition& c1, const Composition& c2);
LinComb<Composition> shuffle_compositions(const LinComb<Composition>& a,
                                          const LinComb<Composition>& b);

// Harmonic (quasi-shuffle) product:
//   n1 w * n2 w' = n1(w * n2 w') + n2(n1 w * w') + (n1+n2)(w * w').
LinComb<Composition> harmonic(const Composition& c1, const Composition& c2);
LinComb<Composition> harmonic(const LinComb<Composition>& a, const LinComb<Composition>& b);

// Coefficients of Hoffman's exponential map on the monomial (1,...,1):
// each composition (i1,...,im) of r receives 1/(i1! ... im!).
LinComb<Composition> hoffman_exp_terms(int r);

} // namespace mes
