#pragma once

// Global formulas: the modular height attached to a ramification set over a
// totally real base field (two independent routes), the exact degree
// formula, CM point heights, and the even-ramification normalization of the
// Hodge bundle over Q.

#include "core/numberfield.hpp"

#include <string>
#include <vector>

namespace hc::ht {

enum class height_route { via_minus_one, via_two };

struct height_term {
  std::string label;
  double value = 0;
};

struct height_result {
  double value = 0;
  height_route route = height_route::via_minus_one;
  std::vector<height_term> terms; // value is exactly their sum
};

// h = -zeta'_F(-1)/zeta_F(-1) - n/2 + sum_v (3 N_v - 1)/(4 (N_v - 1)) log N_v,
// over the places v in sigma; requires |sigma| + n odd.
height_result modular_height(const number_field &f, const ramification_set &sigma);

// The same height through s = 2:
// h = zeta'_F(2)/zeta_F(2) + log d_F - n (gamma + log 2pi - 1/2) + local sum.
height_result modular_height_via_s2(const number_field &f, const ramification_set &sigma);

// deg = 4 h_F (-2)^{-n} zeta_F(-1) prod_v (N_v - 1), exact.
rational vigneras_degree(const number_field &f, const ramification_set &sigma);

// CM height over Q for the imaginary quadratic field of fundamental
// discriminant d_e < 0: -L'(0, chi)/L(0, chi) + (1/2) log(d_b / |d_e|).
double cm_height_from_disc(long long d_e, long long d_b);
// General form with a caller-supplied logarithmic derivative.
double cm_height_supplied(double l_ratio, double d_b, double d_ef);

// Hodge bundle normalization over Q (even ramification set):
// -zeta'(-1)/zeta(-1) - 1/2 + sum_p (p + 1)/(4 (p - 1)) log p.
height_result kry_height(const number_field &f, const ramification_set &sigma);

} // namespace hc::ht
