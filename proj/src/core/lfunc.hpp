#pragma once

// Dirichlet L-functions and Dedekind zeta data for the base fields: Hurwitz
// zeta with Euler-Maclaurin tails, exact special values at s = 0 and s = -1,
// and logarithmic derivatives at s = 2 and s = -1 (the latter through the
// completed functional equation).

#include "core/exactval.hpp"
#include "core/numberfield.hpp"

namespace hc::lf {

// Hurwitz zeta and its s-derivative for x > 0, s away from the pole at 1.
double hurwitz_zeta(double s, double x);
double hurwitz_zeta_ds(double s, double x);

// Riemann zeta shorthand (Hurwitz at x = 1).
double zeta(double s);
double zeta_ds(double s);

// chi_d(a) for a fundamental discriminant d.
int quad_char(long long d, long long a);

// L(s, chi_d) and its s-derivative via the Hurwitz decomposition; requires a
// fundamental discriminant d != 1.
double dirichlet_l(double s, long long d);
double dirichlet_l_ds(double s, long long d);

// Exact special values for fundamental discriminants.
rational l_value_at0(long long d);       // d < 0: -(1/|d|) sum chi(a) a
rational l_value_at_minus1(long long d); // d > 0: -B_{2,chi}/2
double l_log_deriv_at0(long long d);     // d < 0: L'(0)/L(0)

// Dedekind zeta of the base field.
rational zeta_value_at_minus1(const number_field &f);
double zeta_log_deriv_at2(const number_field &f);
// zeta'_F(-1)/zeta_F(-1) through the completed functional equation:
//   -log d_F - zeta'_F(2)/zeta_F(2) + n (gamma + log 2pi - 1).
double zeta_log_deriv_at_minus1(const number_field &f);

double euler_gamma();

} // namespace hc::lf
