#include "core/arch_numerics.hpp"

#include "core/errors.hpp"
#include "core/lfunc.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <complex>
#include <numeric>

namespace hc::arch {

namespace {

double pi() { return boost::math::constants::pi<double>(); }

void require_q_args(double s, double h) {
  if (!(s > -1))
    throw domain_error("legendre_q: s must exceed -1");
  if (!(h > 0))
    throw domain_error("legendre_q: t must exceed 1");
}

// Q_s(1 + h) by the hypergeometric series in z = 2/(t+1); good away from
// t = 1.  Q = 2^s Gamma(s+1)^2/Gamma(2s+2) (t+1)^{-(s+1)} F(s+1,s+1;2s+2;z).
double q_z_series(double s, double h, bool want_dt, double *dt_out) {
  const double tp1 = 2 + h;
  const double z = 2.0 / tp1;
  const double lpref =
      s * std::log(2.0) + 2 * std::lgamma(s + 1) - std::lgamma(2 * s + 2) -
      (s + 1) * std::log(tp1);
  const double pref = std::exp(lpref);
  double term = 1, f = 1, fz = 0; // F and dF/dz
  for (int n = 0; n < 500000; ++n) {
    const double a = s + 1 + n;
    term *= a * a / ((2 * s + 2 + n) * (n + 1)) * z;
    f += term;
    fz += (n + 1) * term / z;
    if (std::abs(term) < 1e-18 * std::abs(f) + 1e-300)
      break;
  }
  if (want_dt)
    *dt_out = -pref / tp1 * ((s + 1) * f + z * fz);
  return pref * f;
}

// Q_s(1 + h) by the logarithmic series in w = (t-1)/(t+1); good near t = 1.
double q_w_series(double s, double h, bool want_dt, double *dt_out) {
  const double tp1 = 2 + h;
  const double w = h / tp1;
  const double lnw = std::log(w);
  const double pref = std::exp(s * std::log(2.0) - (s + 1) * std::log(tp1));
  double c = 1;
  double A = -2 * lf::euler_gamma() - 2 * boost::math::digamma(s + 1);
  double sum = A - lnw;
  double sum_w = -1 / w; // d/dw of the n = 0 term
  double wn = 1;         // w^n
  for (int n = 0; n < 500000; ++n) {
    const double cn1 = c * ((s + 1 + n) / (n + 1)) * ((s + 1 + n) / (n + 1));
    const double An1 = A + 2.0 / (n + 1) - 2.0 / (s + 1 + n);
    const double wn1 = wn * w;
    const double term = cn1 * wn1 * (An1 - lnw);
    sum += term;
    sum_w += cn1 * (static_cast<double>(n + 1) * wn * (An1 - lnw) - wn);
    c = cn1;
    A = An1;
    wn = wn1;
    if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300)
      break;
  }
  if (want_dt) {
    const double dw_dt = 2.0 / (tp1 * tp1);
    *dt_out = -(s + 1) * pref * sum / tp1 + pref * sum_w * dw_dt;
  }
  return pref * sum;
}

double q_at(double s, double h, bool want_dt, double *dt_out) {
  require_q_args(s, h);
  const double w = h / (2 + h);
  return (w < 0.35) ? q_w_series(s, h, want_dt, dt_out)
                    : q_z_series(s, h, want_dt, dt_out);
}

} // namespace

double legendre_q(double s, double t) { return q_at(s, t - 1, false, nullptr); }

double legendre_q_dt(double s, double t) {
  double dt = 0;
  q_at(s, t - 1, true, &dt);
  return dt;
}

double legendre_q_integral_route(double s, double t) {
  require_q_args(s, t - 1);
  const double root = std::sqrt((t - 1) * (t + 1));
  boost::math::quadrature::exp_sinh<double> es;
  auto f = [&](double u) {
    return std::pow(t + root * std::cosh(u), -1 - s);
  };
  return es.integrate(f, 1e-12);
}

double legendre_q_integral(double s) {
  if (!(s > 0))
    throw domain_error("legendre_q_integral: s must be positive");
  boost::math::quadrature::tanh_sinh<double> ts;
  // (1, 2): near the left endpoint the integrator's tc = 1 - t keeps the
  // distance t - 1 = -tc exact; the deepest nodes can underflow it to 0,
  // where the integrable log singularity is capped.
  auto f1 = [&](double t, double tc) {
    double h = t < 1.5 ? -tc : t - 1;
    if (!(h > 0))
      h = 1e-290;
    return q_at(s, h, false, nullptr);
  };
  // (2, inf) via t = 2 u^-8, making the tail integrand ~ u^{8s-1} near 0.
  auto f2 = [&](double u) {
    if (u < 1e-20)
      return 0.0;
    const double u2 = u * u, u4 = u2 * u2, u8 = u4 * u4;
    const double t = 2.0 / u8;
    return q_at(s, t - 1, false, nullptr) * 16.0 / (u8 * u);
  };
  return ts.integrate(f1, 1.0, 2.0, 1e-12) + ts.integrate(f2, 0.0, 1.0, 1e-12);
}

double legendre_q_endpoint_one(double s) {
  const double h = 1e-10;
  double dt = 0;
  q_at(s, h, true, &dt);
  return h * (2 + h) * dt;
}

double legendre_q_endpoint_inf(double s) {
  if (!(s > 0))
    throw domain_error("legendre_q_endpoint_inf: s must be positive");
  // Leading decay is C t^{-s} with C = (s+1) 2^s Gamma(s+1)^2/Gamma(2s+2);
  // evaluate where that envelope has dropped to 1e-7.
  const double C =
      (s + 1) * std::exp(s * std::log(2.0) + 2 * std::lgamma(s + 1) -
                         std::lgamma(2 * s + 2));
  const double t = std::max(1e6, std::pow(C * 1e7, 1.0 / s));
  double dt = 0;
  q_at(s, t - 1, true, &dt);
  return (t - 1) * (t + 1) * dt;
}

double arch_whittaker(double a, double s, int u_sign) {
  if (u_sign <= 0)
    return 0;
  if (!(a > 0))
    throw domain_error("arch_whittaker: a must be positive");
  if (!(s > -2) || s > 4)
    throw domain_error("arch_whittaker: s outside (-2, 4]");
  const double P = pi();
  if (s == 0)
    return -4 * P * P * a * std::exp(-2 * P * a);
  const double half = s / 2;
  const double c = half + 1;
  // (t + 2a)^c - (2a)^c without cancellation near t = 0.
  auto bracket = [&](double t) {
    return std::pow(2 * a, c) * std::expm1(c * std::log1p(t / (2 * a)));
  };
  auto integrand = [&](double t) {
    return std::exp(-2 * P * t) * bracket(t) * std::pow(t, half - 1);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  const double jreg = ts.integrate(integrand, 0.0, 1.0, 1e-12) +
                      es.integrate([&](double u) { return integrand(1 + u); }, 1e-12);
  const double pref = -2 * std::pow(P, s + 2) * std::exp(-2 * P * a) / std::tgamma(half + 2);
  const double val =
      pref * (jreg / std::tgamma(half) + std::pow(2 * a, c) * std::pow(2 * P, -half));
  return std::pow(a, -half) * val;
}

std::pair<double, double> arch_whittaker_deriv0(double a) {
  if (!(a > 0))
    throw domain_error("arch_whittaker_deriv0: a must be positive");
  const double P = pi();
  const double e = std::exp(-2 * P * a);
  const double w0 = -4 * P * P * a * e;
  const double w0p =
      -(P / 2) * e - 2 * P * P * (std::log(P) + lf::euler_gamma() - 1) * a * e;
  return {w0, w0p};
}

double holproj_constant() { return -(1 + std::log(4.0)) / 2; }

namespace {
// The s-family whose Laurent data at s = 0 carries the projection constant.
double holproj_family(double s) {
  const double P = pi();
  return P / 2 * std::pow(4 * P, -s) * std::tgamma(s) +
         2 * P * P * (std::log(P) + lf::euler_gamma() - 1) * std::pow(4 * P, -s - 1) *
             std::tgamma(s + 1);
}
} // namespace

double holproj_laurent_constant() {
  const double P = pi();
  auto g = [&](double h) { return holproj_family(h) - P / (2 * h); };
  auto c = [&](double h) { return (g(h) + g(-h)) / 2; }; // kills odd orders
  const double h = 1e-3;
  return (4 * c(h) - c(2 * h)) / 3;
}

double holproj_residue() {
  auto r = [&](double h) { return h * holproj_family(h); };
  const double h = 1e-4;
  return (8 * r(h) - 6 * r(2 * h) + r(4 * h)) / 3;
}

double gamma_ratio_deriv() {
  return 1 - lf::euler_gamma() - std::log(4 * pi());
}

double gamma_ratio_deriv_fd() {
  auto f = [&](double s) { return -s * std::log(4 * pi()) + std::lgamma(s + 2); };
  const double h = 1e-5;
  return (f(h) - f(-h)) / (2 * h);
}

namespace {
double sigma_power(long n, double e) {
  double s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d)
      continue;
    s += std::pow(static_cast<double>(d), e);
    const long q = n / d;
    if (q != d)
      s += std::pow(static_cast<double>(q), e);
  }
  return s;
}
} // namespace

double eisenstein_fourier(double x, double y, double s) {
  if (!(y > 0))
    throw domain_error("eisenstein_fourier: y must be positive");
  const double P = pi();
  const double z2s = lf::zeta(2 * s);
  const double theta = std::pow(P, -s) * std::tgamma(s) * z2s;
  const double phi =
      std::sqrt(P) * std::tgamma(s - 0.5) * lf::zeta(2 * s - 1) / (std::tgamma(s) * z2s);
  double sum = 0;
  for (long n = 1; n <= 400; ++n) {
    const double kn = boost::math::cyl_bessel_k(s - 0.5, 2 * P * n * y);
    const double term = std::pow(static_cast<double>(n), s - 0.5) *
                        sigma_power(n, 1 - 2 * s) * kn * std::cos(2 * P * n * x);
    sum += term;
    if (std::abs(kn) < 1e-22)
      break;
  }
  return std::pow(y, s) + phi * std::pow(y, 1 - s) + 4 / theta * std::sqrt(y) * sum;
}

double eisenstein_lattice(double x, double y, double s, long cmax) {
  if (!(y > 0) || cmax < 1)
    throw domain_error("eisenstein_lattice: bad arguments");
  double sum = 0;
  for (long c = -cmax; c <= cmax; ++c)
    for (long d = -cmax; d <= cmax; ++d) {
      if ((c | d) == 0)
        continue;
      if (std::gcd(std::labs(c), std::labs(d)) != 1)
        continue;
      const double re = c * x + d;
      sum += std::pow(y / (re * re + c * c * y * y), s);
    }
  return sum / 2;
}

double kronecker_lhs(double x, double y) {
  if (!(y > 0))
    throw domain_error("kronecker_lhs: y must be positive");
  const double P = pi();
  const std::complex<double> q = std::polar(std::exp(-2 * P * y), 2 * P * x);
  double log_abs_delta = -2 * P * y; // log|q|
  std::complex<double> qn = 1;
  for (int n = 1; n <= 2000; ++n) {
    qn *= q;
    log_abs_delta += 24 * std::log(std::abs(1.0 - qn));
    if (std::abs(qn) < 1e-22)
      break;
  }
  return -2 * log_abs_delta - 12 * std::log(y);
}

double kronecker_rhs(double x, double y) {
  if (!(y > 0))
    throw domain_error("kronecker_rhs: y must be positive");
  const double P = pi();
  double S = 0;
  for (long n = 1; n <= 2000; ++n) {
    const double term =
        sigma_power(n, -1) * std::exp(-2 * P * n * y) * std::cos(2 * P * n * x);
    S += term;
    if (std::abs(term) < 1e-22)
      break;
  }
  const double g = lf::euler_gamma();
  const double xi2 = -0.5 * (std::log(P) + g) + lf::zeta_ds(2.0) / lf::zeta(2.0);
  const double cphi = 2 - 2 * std::log(4 * P) - 24 * lf::zeta_ds(-1.0);
  return 4 * P *
         (y + 12 / P * S + 3 / P * (g - std::log(4 * P) - 2 * xi2 - std::log(y) - cphi));
}

double kronecker_residual(double x, double y) {
  return std::abs(kronecker_lhs(x, y) - kronecker_rhs(x, y));
}

} // namespace hc::arch
