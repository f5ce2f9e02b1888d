#include "core/lfunc.hpp"

#include "core/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

namespace hc::lf {

namespace {

constexpr int em_shift = 32;  // terms summed directly before the tail
constexpr int em_orders = 8;  // Bernoulli correction terms

// B_{2j} for j = 1..8.
constexpr double bern2[em_orders] = {1.0 / 6,  -1.0 / 30,    1.0 / 42,  -1.0 / 30,
                                     5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

void require_args(double s, double x) {
  if (!(x > 0))
    throw domain_error("hurwitz_zeta: x must be positive");
  if (std::abs(s - 1.0) < 1e-4)
    throw domain_error("hurwitz_zeta: s too close to the pole at 1");
  if (s < -3 || s > 6)
    throw domain_error("hurwitz_zeta: s outside the supported range [-3, 6]");
}

} // namespace

double euler_gamma() { return boost::math::constants::euler<double>(); }

double hurwitz_zeta(double s, double x) {
  require_args(s, x);
  double sum = 0;
  for (int k = 0; k < em_shift; ++k)
    sum += std::pow(x + k, -s);
  const double X = x + em_shift;
  const double lX = std::log(X);
  sum += std::exp((1 - s) * lX) / (s - 1);
  sum += 0.5 * std::exp(-s * lX);
  // Euler-Maclaurin tail: B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * X^{1-s-2j}.
  double poch = s;
  for (int j = 1; j <= em_orders; ++j) {
    sum += bern2[j - 1] / factorial(2 * j) * poch * std::exp((1 - s - 2 * j) * lX);
    if (j < em_orders)
      poch *= (s + 2 * j - 1) * (s + 2 * j);
  }
  return sum;
}

double hurwitz_zeta_ds(double s, double x) {
  require_args(s, x);
  double sum = 0;
  for (int k = 0; k < em_shift; ++k) {
    const double l = std::log(x + k);
    sum -= l * std::exp(-s * l);
  }
  const double X = x + em_shift;
  const double lX = std::log(X);
  const double x1s = std::exp((1 - s) * lX);
  sum += -lX * x1s / (s - 1) - x1s / ((s - 1) * (s - 1));
  sum += -0.5 * lX * std::exp(-s * lX);
  for (int j = 1; j <= em_orders; ++j) {
    // Product rule over the factors (s)(s+1)...(s+2j-2).
    double poch = 1, dpoch = 0;
    for (int i = 0; i <= 2 * j - 2; ++i) {
      dpoch = dpoch * (s + i) + poch;
      poch *= s + i;
    }
    const double pw = std::exp((1 - s - 2 * j) * lX);
    sum += bern2[j - 1] / factorial(2 * j) * (dpoch - poch * lX) * pw;
  }
  return sum;
}

double zeta(double s) { return hurwitz_zeta(s, 1.0); }
double zeta_ds(double s) { return hurwitz_zeta_ds(s, 1.0); }

int quad_char(long long d, long long a) {
  if (!is_fundamental_discriminant(d))
    throw domain_error("quad_char: discriminant is not fundamental");
  return kronecker_symbol(d, a);
}

double dirichlet_l(double s, long long d) {
  const long long q = d < 0 ? -d : d;
  double sum = 0;
  for (long long a = 1; a <= q; ++a) {
    int chi = quad_char(d, a);
    if (chi != 0)
      sum += chi * hurwitz_zeta(s, static_cast<double>(a) / q);
  }
  return std::pow(static_cast<double>(q), -s) * sum;
}

double dirichlet_l_ds(double s, long long d) {
  const long long q = d < 0 ? -d : d;
  const double lq = std::log(static_cast<double>(q));
  double sum = 0;
  for (long long a = 1; a <= q; ++a) {
    int chi = quad_char(d, a);
    if (chi != 0) {
      const double xa = static_cast<double>(a) / q;
      sum += chi * (hurwitz_zeta_ds(s, xa) - lq * hurwitz_zeta(s, xa));
    }
  }
  return std::pow(static_cast<double>(q), -s) * sum;
}

rational l_value_at0(long long d) {
  if (d >= 0 || !is_fundamental_discriminant(d))
    throw domain_error("l_value_at0: need a negative fundamental discriminant");
  const long long q = -d;
  rational sum = 0;
  for (long long a = 1; a < q; ++a)
    sum += rational(quad_char(d, a)) * a;
  return -sum / q;
}

rational l_value_at_minus1(long long d) {
  if (d <= 1 || !is_fundamental_discriminant(d))
    throw domain_error("l_value_at_minus1: need a positive fundamental discriminant");
  // -B_{2,chi}/2 with B_{2,chi} = d sum_a chi(a) B_2(a/d).
  rational b2chi = 0;
  for (long long a = 1; a <= d; ++a) {
    const rational x(a, d);
    b2chi += rational(quad_char(d, a)) * (x * x - x + rational(1, 6));
  }
  b2chi *= d;
  return -b2chi / 2;
}

double l_log_deriv_at0(long long d) {
  if (d >= 0 || !is_fundamental_discriminant(d))
    throw domain_error("l_log_deriv_at0: need a negative fundamental discriminant");
  const long long q = -d;
  // L'(0) = sum_a chi(a) log Gamma(a/q) - log(q) L(0); the log(2 pi)/2 shift
  // in d/ds zeta_H(0, x) cancels against sum chi = 0.
  double lp = 0;
  for (long long a = 1; a < q; ++a) {
    int chi = quad_char(d, a);
    if (chi != 0)
      lp += chi * std::lgamma(static_cast<double>(a) / q);
  }
  const double l0 = to_double(l_value_at0(d));
  if (l0 == 0)
    throw domain_error("l_log_deriv_at0: L(0) vanishes");
  lp -= std::log(static_cast<double>(q)) * l0;
  return lp / l0;
}

rational zeta_value_at_minus1(const number_field &f) {
  const rational riemann(-1, 12);
  if (f.kind == field_kind::rationals)
    return riemann;
  return riemann * l_value_at_minus1(f.disc);
}

double zeta_log_deriv_at2(const number_field &f) {
  double r = zeta_ds(2.0) / zeta(2.0);
  if (f.kind == field_kind::real_quadratic)
    r += dirichlet_l_ds(2.0, f.disc) / dirichlet_l(2.0, f.disc);
  return r;
}

double zeta_log_deriv_at_minus1(const number_field &f) {
  const double two_pi = 2 * boost::math::constants::pi<double>();
  return -std::log(static_cast<double>(f.disc)) - zeta_log_deriv_at2(f) +
         f.degree * (euler_gamma() + std::log(two_pi) - 1);
}

} // namespace hc::lf
