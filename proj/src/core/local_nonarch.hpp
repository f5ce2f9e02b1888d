#pragma once

// Closed forms for local Whittaker functions at finite places, their central
// derivatives, and the identities connecting them to Hecke correspondences
// and intertwining constants.  All values are exact elements of
// Q + Q*sqrt(N) (+ log N multiples); N is the residue norm of the place,
// delta the valuation of the local different, r the valuation of the
// additive parameter.

#include "core/exactval.hpp"
#include "core/whittaker_types.hpp"

#include <string>
#include <utility>

namespace hc::local {

// W(s) = prefix * P(N^{-s}); an empty polynomial means W is identically 0.
struct whittaker_form {
  sqrt_val prefix;
  poly P;

  bool is_zero() const { return P.is_zero() || prefix.is_zero(); }
  sqrt_val at(const rational &t) const { return P.eval(t) * prefix; }
  double at_s(double s) const;
  // Value and s-derivative at s = 0 (t = 1):
  sqrt_val value0() const { return at(1); }
  log_val deriv0() const; // = -log N * prefix * P'(1)
};

// Matrix (split) place, unit-supported similitude: exact polynomial form.
// r < 0 with r >= -delta is outside the supported closed form and throws;
// r < -delta gives 0; a non-unit u gives 0.
whittaker_form whittaker_split_form(long long N, int delta, int r, bool u_unit = true);

// Division (nonsplit) place, unit-supported section: exact polynomial form
// for all r (0 when r < -delta or u is not a unit).
whittaker_form whittaker_nonsplit_form(long long N, int delta, int r, bool u_unit = true);

// Exact value at integer s and numeric value at real s for either algebra.
sqrt_val whittaker_value(const whittaker_spec &spec, long s_int);
double whittaker_value_num(const whittaker_spec &spec, double s);

// The combination W'(0) - (1/2) log|a| * W(0) at a split place, in the
// assembled closed form (value-plus-log-multiple).
log_val whittaker_split_deriv_combo(long long N, int delta, int r);
// The same combination computed directly from the polynomial form.
log_val whittaker_split_deriv_combo_symbolic(long long N, int delta, int r);

// Central derivative of the nonsplit form: W'(0) as a log N multiple.
log_val whittaker_nonsplit_deriv0(long long N, int delta, int r);

// vol(O_B^x) = |d|^2 N^{-1} (1 - N^{-2}) for the division order.
rational division_unit_volume(long long N, int delta);

// Central value of the full-order (Siegel-Weil) section for r >= 0.
sqrt_val siegel_weil_whittaker(long long N, int delta, int r, algebra_kind kind,
                               bool u_unit = true);

// Wall-crossing normalizations (c_+, c_-) with c_+ * vol-matched leading
// terms; c_+ * SW_matrix(r) + c_- * SW_division(r) = 1 for all r >= 0.
std::pair<sqrt_val, sqrt_val> wall_crossing_pair(long long N, int delta);

struct check_result {
  std::string label;
  double lhs = 0, rhs = 0;
  double abs_error = 0;
  double tolerance = 0;
  bool pass = false;
};

// Integral of the constant-term identity: both sides of the self-duality
// relation integral(Psi) = vol(O), compared exactly.
check_result fourier_inversion_check(long long N, int delta);

// integral over a of the nonsplit Whittaker function, which must equal
// -vol(O_B^x) independently of s; checked exactly at integer s in {1,2,3}
// and symbolically in t.
check_result nonsplit_integral_check(long long N, int delta);

// Value of the intertwining operator on the unit-supported section at s = 0,
// together with the logarithmic correction term as a ratio:
//   w_phi = r(w)phi(0, u) = -vol(O_B^x) as a sqrt_val,
//   c_ratio = c(0, u)/w_phi = ((1 - N)/(1 + N)) log N for even delta, 0 odd.
struct intertwining_result {
  sqrt_val w_phi;
  log_val c_ratio;
};
intertwining_result intertwining_w_value(long long N, int delta);

// r(w) applied to the averaged standard section: value at (0, u) as a
// multiple of r(w)phi(0, u) (the returned log_val is that ratio).
log_val averaged_kbar_ratio(long long N, int delta);

// r(w) applied to the averaged level-raising section: ratio to r(w)phi(0,u)
// (a plain rational) and the integral over the similitude line.
struct averaged_j_result {
  rational ratio;     // -(N-1)/(4(N+1))
  sqrt_val integral;  // (1/4) |d|^2 N^{-1} (1 - N^{-1})^2
};
averaged_j_result averaged_j_w(long long N, int delta);

// Weights (A_0, A_1) on the two components solving A_0 + A_1 = 0 and
// (N+1)(A_0 - A_1) = 1/2.
std::pair<rational, rational> component_weights(long long N);

// Local discrepancy between the Hecke-translated height pairing and the
// arithmetic intersection at a split place: the closed form and the
// coset-counted (Zhang) route.
log_val hecke_hodge_defect(long long N, int delta, int r, bool u_unit = true);
log_val hecke_hodge_defect_counted(long long N, int delta, int r, bool u_unit = true);

// Exact identity: deriv-combo minus half the defect collapses to
// (zeta-ratio + different) * W(0) plus an r-independent remainder.
check_result cancellation_split(long long N, int delta, int r);

// Constant alpha with
//   -2 r(w)kbar + 2 r(w)l * log N + c(0, u)
//     = (-log|d_v| + alpha log N) * r(w)phi(0, u),
// verified across delta = 0..3 before being returned.
rational alpha_constant(long long N);

// alpha + 2 N^{-2}/(1 - N^{-2}) + 1 = (3N - 1)/(2(N - 1)), the per-place
// coefficient entering the global height; returned after an exact check.
rational local_height_coefficient(long long N);

} // namespace hc::local
