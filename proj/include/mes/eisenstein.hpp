#pragma once

#include "mes/composition.hpp"
#include "mes/divisor.hpp"
#include "mes/hopf.hpp"
#include "mes/qseries.hpp"

#include <complex>
#include <map>

namespace mes {

// Formal sum  Sigma_u  zeta~(u) f_u(q)  over admissible-or-empty symbols u,
// the carrier of Fourier expansions and of the regularized series.
struct MzvQTensor {
    int order = 0;
    std::map<Composition, QSeries> terms;

    void add(const Composition& u, const QSeries& f);
    MzvQTensor& operator+=(const MzvQTensor& o);
    MzvQTensor& operator-=(const MzvQTensor& o);
    MzvQTensor& operator*=(const Rational& s);
    const QSeries* find(const Composition& u) const;
    bool operator==(const MzvQTensor& o) const { return order == o.order && terms == o.terms; }
};

MzvQTensor apply_q_derivative(const MzvQTensor& t);

// Fold symbols with exactly known rational normalized values into the empty
// symbol.  Symbols without a known value are left untouched.
MzvQTensor reduce_known_constants(const MzvQTensor& t);

// Regularized multiple Eisenstein series (normalized): left coproduct slots
// through the regularized zeta symbol, right slots through the
// shuffle-regularized q-series.
MzvQTensor mes_sh(const Composition& c, int order, const Budget& budget = {});

// Fourier expansion of the classical series for all parts >= 2: the sum over
// the 2^r marker words of the closed-form expansion, zeta products expanded
// in the admissible basis by the harmonic product, q-factors the normalized
// divisor-sum series.
MzvQTensor fourier_expansion(const Composition& c, int order);

// One marker word's share of the expansion.
MzvQTensor fourier_word(const Composition& c, const XYWord& w, int order);

// (zeta~sh x g~sh) applied to one marker-word class of the coproduct.
MzvQTensor psi_applied(const Composition& c, const XYWord& w, int order);

struct LatticeParams {
    std::complex<double> tau{0.0, 1.0};
    int L = 80;
    int M = 80;
    bool tail_correction = true;
};

// Truncated ordered lattice sum, inner index m in [-M, M] then rows
// l in [0, L], in exactly that order; optional one-term integral tail
// correction for the inner sums.  All parts >= 2, depth <= 3.
std::complex<double> lattice_eval(const Composition& c, const LatticeParams& p);
std::complex<double> lattice_eval_serial(const Composition& c, const LatticeParams& p);

// Psi_{n1,...,nr}(tau) = sum over m1 < ... < mr of prod (tau+m_i)^{-n_i},
// truncated at |m_i| <= cutoff with integral tail corrections.
std::complex<double> psi_eval(const Composition& c, std::complex<double> tau, int cutoff);

// Numeric check of the vanishing identity behind the Fourier expansion
// (the coefficient of the divergent inner sum): true iff |sum| <= tol.
bool check_vanishing(const Composition& c, double tol);

struct NumericSeries {
    std::vector<std::complex<double>> coeff;
    std::vector<double> err;
};

// Numeric q-coefficients of Sigma_u zeta~(u) f_u with propagated error bounds.
NumericSeries numeric_eval(const MzvQTensor& t, double tol);

// Value of the tensor at tau (summing coeff_n e^{2 pi i tau n}), normalized.
std::complex<double> eval_at_tau(const MzvQTensor& t, std::complex<double> tau, double tol);

std::string to_string(const MzvQTensor& t);

} // namespace mes
