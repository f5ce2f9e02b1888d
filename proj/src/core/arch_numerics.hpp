#pragma once

// Archimedean special functions: Legendre functions of the second kind and
// their integrals, the analytically continued Whittaker integral at the real
// place, holomorphic-projection and gamma-factor constants, and the
// Eisenstein limit identity for the discriminant form.

#include <utility>

namespace hc::arch {

// Q_s(t) for t > 1, s > -1: hypergeometric series in 2/(t+1) away from the
// endpoint, logarithmic series in (t-1)/(t+1) near it.
double legendre_q(double s, double t);
double legendre_q_dt(double s, double t);
// Independent quadrature route int_0^inf (t + sqrt(t^2-1) cosh u)^{-1-s} du.
double legendre_q_integral_route(double s, double t);

// int_1^inf Q_s(t) dt, by quadrature; equals 1/(s(s+1)).
double legendre_q_integral(double s);
// (t^2 - 1) Q_s'(t) as t -> 1+ (limit -1), evaluated at t = 1 + 1e-10.
double legendre_q_endpoint_one(double s);
// (t^2 - 1) Q_s'(t) at a decay-scaled large t; tends to 0.
double legendre_q_endpoint_inf(double s);

// a^{-s/2} W_a(s) at the real place for a > 0, continued to s in (-2, 4];
// zero on the negative similitude sector.
double arch_whittaker(double a, double s, int u_sign = 1);
// Central value and s-derivative of the same normalized function:
//   W(0)  = -4 pi^2 a e^{-2 pi a}
//   W'(0) = -(pi/2) e^{-2 pi a} - 2 pi^2 (log pi + gamma - 1) a e^{-2 pi a}.
std::pair<double, double> arch_whittaker_deriv0(double a);

// Holomorphic-projection kernel constants: the Laurent expansion of the
// s-family at s = 0 has residue pi/2 and constant term -(pi/2)(1 + log 4).
double holproj_constant();          // -(1 + log 4)/2
double holproj_laurent_constant();  // numeric extrapolation, = pi * above
double holproj_residue();           // numeric extrapolation, = pi/2
// d/ds log[(4 pi)^{-s} Gamma(s + 2)] at s = 0 = 1 - gamma - log(4 pi).
double gamma_ratio_deriv();
double gamma_ratio_deriv_fd();

// Eisenstein series over the modular group: Fourier-Bessel evaluation and a
// direct coprime-pair lattice sum.
double eisenstein_fourier(double x, double y, double s);
double eisenstein_lattice(double x, double y, double s, long cmax);

// Limit identity for the discriminant form: lhs = -2 log|Delta| - 12 log y,
// rhs from the constant Fourier data and zeta constants; residual = |diff|.
double kronecker_lhs(double x, double y);
double kronecker_rhs(double x, double y);
double kronecker_residual(double x, double y);

} // namespace hc::arch
