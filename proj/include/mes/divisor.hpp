#pragma once

#include "mes/composition.hpp"
#include "mes/qseries.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace mes {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration budgets for the bi-truncated generating machinery.  The
// defaults cover every index the verification suite needs; callers may widen
// them explicitly.
struct Budget {
    int max_depth = 8;
    int max_weight = 12;
    int max_order = 200;
};

// sigma_{n1,...,nr}(n) = sum over u1 v1 + ... + ur vr = n, 0 < u1 < ... < ur,
// of v1^{n1-1} ... vr^{nr-1}.
Integer multiple_divisor_sum(const Composition& c, int n);

// Normalized generating series of the multiple divisor sums: the coefficient
// of q^n is sigma_c(n) / prod (ni-1)!.  Constant term 0 for nonempty c.
QSeries g_tilde(const Composition& c, int order);

// Multivariate truncated series: exponent tuples in x_1..x_nvars of total
// degree <= max_degree, with QSeries coefficients truncated at `order`.
struct MultiSeries {
    int nvars = 0;
    int max_degree = 0;
    int order = 0;
    std::map<std::vector<int>, QSeries> coeffs;

    void add_term(const std::vector<int>& exps, const QSeries& s);
    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator*=(const Rational& s);
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    const QSeries* find(const std::vector<int>& exps) const;
    QSeries coefficient(const std::vector<int>& exps) const; // zero series when absent
    bool operator==(const MultiSeries& o) const;
};

// A linear form in the ambient variables, as its coefficient vector.
using LinearForm = std::vector<Rational>;

// H(n1,...,nr; z1,...,zr) truncated: sum over 0 < u1 < ... < ur of
// prod_j exp(u_j z_j) (q^{u_j}/(1-q^{u_j}))^{n_j}, with each z_j a linear
// form in x_1..x_nvars.
MultiSeries h_series(const std::vector<int>& n, const std::vector<LinearForm>& forms, int nvars,
                     int max_degree, int order, const Budget& budget = {});

// Hoffman-exponential combination h(z_1,...,z_r) = sum over compositions
// (i1,...,im) of r of 1/(i1!...im!) H(i1,...,im; y-blocks), the y-block j
// being the sum of the z's it covers.  With the identity forms z_t = x_t this
// is the operation surface; general forms feed the shuffle-regularized
// series below.
MultiSeries h_truncated(int r, int max_degree, int order, const Budget& budget = {});

// Generating series of the shuffle-regularized q-series: h evaluated on the
// difference forms (x_r-x_{r-1},...,x_2-x_1,x_1).  Two equivalent block
// conventions are exposed; they must agree and are cross-checked in tests.
MultiSeries g_sh_series(int r, int max_degree, int order, const Budget& budget = {});
MultiSeries g_sh_series_primed(int r, int max_degree, int order, const Budget& budget = {});

// Coefficient extraction kernel for one index: the coefficient of
// x_1^{n1-1}...x_r^{nr-1} in g_sh, an exact rational q-series.  For indices
// with all parts >= 2 this equals g_tilde(c).
QSeries g_tilde_sh(const Composition& c, int order, const Budget& budget = {});
QSeries g_tilde_sh_serial(const Composition& c, int order, const Budget& budget = {});

} // namespace mes
