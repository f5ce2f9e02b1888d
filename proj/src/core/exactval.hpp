#pragma once

// Exact arithmetic helpers: rationals, dense rational polynomials, and small
// closed-form values of the shape c * sqrt(N)^par and a + b*log(N).  Every
// non-archimedean closed form in the library lives in these rings, so keeping
// them exact lets identity checks compare with zero tolerance.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hc {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

double to_double(const rational &x);
std::string to_string(const rational &x);

// x^e with e possibly negative; throws on 0^negative.
rational rat_pow(const rational &x, long e);

// c * sqrt(N)^par, par in {0,1}.  The base N travels with the value so that
// mixed-base arithmetic is rejected instead of silently misfolding; values
// with c == 0 act as a universal zero.
struct sqrt_val {
  long long N = 1;
  rational c = 0;
  int par = 0;

  sqrt_val() = default;
  sqrt_val(long long base, rational coeff, int parity);

  static sqrt_val zero(long long base) { return {base, 0, 0}; }
  static sqrt_val one(long long base) { return {base, 1, 0}; }
  // sqrt(N)^e for any integer e, e.g. e = -3 gives N^-2 * sqrt(N).
  static sqrt_val half_pow(long long base, long e);

  bool is_zero() const { return c == 0; }
  double value() const;
  std::string str() const;

  sqrt_val operator-() const;
  sqrt_val &operator+=(const sqrt_val &o);
  sqrt_val &operator-=(const sqrt_val &o);
  friend sqrt_val operator+(sqrt_val a, const sqrt_val &b) { return a += b; }
  friend sqrt_val operator-(sqrt_val a, const sqrt_val &b) { return a -= b; }
  friend sqrt_val operator*(const sqrt_val &a, const sqrt_val &b);
  friend sqrt_val operator*(const rational &k, sqrt_val v) {
    v.c *= k;
    return v;
  }
  friend bool operator==(const sqrt_val &a, const sqrt_val &b);
};

// a + b * log(N) with sqrt_val coefficients over the same base.
struct log_val {
  sqrt_val a;
  sqrt_val b;

  log_val() = default;
  log_val(sqrt_val plain, sqrt_val log_coeff);
  static log_val zero(long long base) {
    return {sqrt_val::zero(base), sqrt_val::zero(base)};
  }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  double value() const;
  std::string str() const;

  log_val operator-() const;
  log_val &operator+=(const log_val &o);
  log_val &operator-=(const log_val &o);
  friend log_val operator+(log_val x, const log_val &y) { return x += y; }
  friend log_val operator-(log_val x, const log_val &y) { return x -= y; }
  friend log_val operator*(const rational &k, log_val v) {
    v.a = k * v.a;
    v.b = k * v.b;
    return v;
  }
  friend bool operator==(const log_val &x, const log_val &y);
};

// Dense polynomial over Q, indexed so that c[i] multiplies t^i.
struct poly {
  std::vector<rational> c;

  poly() = default;
  explicit poly(std::vector<rational> coeffs);
  static poly constant(const rational &k);
  static poly monomial(const rational &k, std::size_t deg);

  bool is_zero() const;
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  void trim();

  rational eval(const rational &t) const;
  double eval(double t) const;
  poly deriv() const;

  poly &operator+=(const poly &o);
  poly &operator-=(const poly &o);
  friend poly operator+(poly a, const poly &b) { return a += b; }
  friend poly operator-(poly a, const poly &b) { return a -= b; }
  friend poly operator*(const poly &a, const poly &b);
  friend poly operator*(const rational &k, poly p);
  friend bool operator==(const poly &a, const poly &b);
};

// 1 + t + ... + t^(n-1); n <= 0 gives the zero polynomial.
poly geometric_poly(long n);

} // namespace hc
