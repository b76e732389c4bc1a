#pragma once

#include "mes/composition.hpp"
#include "mes/lincomb.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace mes {

// Polynomial in the regularization variable T whose coefficients are exact
// combinations of admissible (or empty) indices.
struct RegPolynomial {
    std::vector<LinComb<Composition>> coeffs; // index = T-degree

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const LinComb<Composition>& coeff(int d) const;
    bool operator==(const RegPolynomial&) const = default;
};

// Image of an index under the shuffle-regularization homomorphism into
// polynomials over the admissible algebra.  Admissible indices map to
// themselves in degree 0; trailing 1-parts are peeled with the shuffle
// identity, a triangular and terminating scheme.
RegPolynomial shuffle_regularize(const Composition& c);

// Constant term of the above: the regularized zeta symbol.
LinComb<Composition> zeta_sh_symbol(const Composition& c);

struct MzvValue {
    std::complex<double> value;
    double abs_error = 0.0;
};

// Numeric multiple zeta value for an admissible index, increasing summation
// convention.  Supported range: weight <= 12, depth <= 4.  Throws
// std::domain_error outside the range and std::runtime_error when the
// requested tolerance cannot be met.
MzvValue mzv_eval(const Composition& c, double tol);

// mzv_eval divided by (-2 pi i)^{weight}; real for even weight, purely
// imaginary for odd weight.
MzvValue zeta_tilde_eval(const Composition& c, double tol);

// Exact rational normalized values where they exist: the empty index, even
// single zetas (via Bernoulli numbers) and the shipped depth-2 entries
// (1,3) and (2,2).
std::optional<Rational> zeta_tilde_exact(const Composition& c);

Rational bernoulli(unsigned n);

// Numeric value of a symbol combination, plain and normalized variants.
std::complex<double> eval_symbol(const LinComb<Composition>& symbols, double tol);
std::complex<double> eval_symbol_tilde(const LinComb<Composition>& symbols, double tol);

} // namespace mes
