#include "core/local_nonarch.hpp"

#include "core/errors.hpp"
#include "core/numberfield.hpp"
#include "core/padic_oracle.hpp"

#include <cmath>

namespace hc::local {

namespace {

// sum_{n=0}^{hi} (N t)^n as a polynomial in t; empty for hi < 0.
poly geom_tN(long long N, int hi) {
  if (hi < 0)
    return poly();
  std::vector<rational> c(static_cast<std::size_t>(hi) + 1);
  rational pw = 1;
  for (int n = 0; n <= hi; ++n) {
    c[static_cast<std::size_t>(n)] = pw;
    pw *= N;
  }
  return poly(std::move(c));
}

// sum_{j=0}^{hi} (t/N)^j as a polynomial in t; empty for hi < 0.
poly geom_t_over_N(long long N, int hi) {
  if (hi < 0)
    return poly();
  std::vector<rational> c(static_cast<std::size_t>(hi) + 1);
  rational pw = 1;
  for (int j = 0; j <= hi; ++j) {
    c[static_cast<std::size_t>(j)] = pw;
    pw /= N;
  }
  return poly(std::move(c));
}

poly one_minus_t() { return poly({rational(1), rational(-1)}); }

rational b_r(long long N, int r) {
  const rational ninv(1, N);
  return rational(r + 2) * rat_pow(ninv, r + 1) - rational(r) * rat_pow(ninv, r + 2) -
         rational(r + 2) * ninv + rational(r);
}

void require_place(long long N, int delta) {
  if (N < 2)
    throw domain_error("residue norm must be at least 2");
  if (delta < 0)
    throw domain_error("different valuation must be >= 0");
}

check_result make_check(std::string label, double lhs, double rhs, double tol, bool pass) {
  check_result c;
  c.label = std::move(label);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_error = std::abs(lhs - rhs);
  c.tolerance = tol;
  c.pass = pass;
  return c;
}

} // namespace

double whittaker_form::at_s(double s) const {
  if (is_zero())
    return 0;
  const double t = std::pow(static_cast<double>(prefix.N), -s);
  return prefix.value() * P.eval(t);
}

log_val whittaker_form::deriv0() const {
  const long long base = prefix.N;
  if (is_zero())
    return log_val::zero(base);
  // d/ds P(N^{-s}) at s = 0 is -log N * P'(1).
  sqrt_val b = rational(-1) * (P.deriv().eval(rational(1)) * prefix);
  return {sqrt_val::zero(base), b};
}

whittaker_form whittaker_split_form(long long N, int delta, int r, bool u_unit) {
  require_place(N, delta);
  whittaker_form f;
  f.prefix = sqrt_val::half_pow(N, -3 * delta);
  if (!u_unit || r < -delta) {
    f.prefix = sqrt_val::zero(N);
    return f;
  }
  if (r < 0)
    throw domain_error("split closed form supports r >= 0 only; use the counting "
                       "oracle for negative r");
  // P(t) = t^delta (1 - t N^{-2}) sum_{j<=r} (t/N)^j
  //        + N^{-delta} (1 - t) sum_{j<delta} (N t)^j.
  poly head = poly::monomial(rational(1), static_cast<std::size_t>(delta)) *
              poly({rational(1), -rational(1, N * N)}) * geom_t_over_N(N, r);
  poly tail = rat_pow(rational(N), -delta) * (one_minus_t() * geom_tN(N, delta - 1));
  f.P = head + tail;
  return f;
}

whittaker_form whittaker_nonsplit_form(long long N, int delta, int r, bool u_unit) {
  require_place(N, delta);
  whittaker_form f;
  if (!u_unit || r < -delta) {
    f.prefix = sqrt_val::zero(N);
    return f;
  }
  f.prefix = (-division_unit_volume(N, delta)) * sqrt_val::half_pow(N, -delta);
  if (r > 0) {
    f.P = one_minus_t() * geom_tN(N, delta);
  } else if (r == 0) {
    f.P = one_minus_t() * geom_tN(N, delta) +
          poly::monomial(rat_pow(rational(N), delta + 1) / (N - 1),
                         static_cast<std::size_t>(delta) + 1);
  } else {
    f.P = one_minus_t() * geom_tN(N, r + delta);
  }
  return f;
}

namespace {
whittaker_form form_for(const whittaker_spec &spec) {
  return spec.algebra == algebra_kind::matrix_split
             ? whittaker_split_form(spec.N, spec.delta, spec.r, spec.u_unit)
             : whittaker_nonsplit_form(spec.N, spec.delta, spec.r, spec.u_unit);
}
} // namespace

sqrt_val whittaker_value(const whittaker_spec &spec, long s_int) {
  whittaker_form f = form_for(spec);
  if (f.is_zero())
    return sqrt_val::zero(spec.N);
  return f.at(rat_pow(rational(spec.N), -s_int));
}

double whittaker_value_num(const whittaker_spec &spec, double s) {
  return form_for(spec).at_s(s);
}

log_val whittaker_split_deriv_combo(long long N, int delta, int r) {
  require_place(N, delta);
  if (r < 0)
    throw domain_error("derivative combination requires r >= 0");
  const sqrt_val half32 = sqrt_val::half_pow(N, -3 * delta);
  const rational ninv(1, N);
  // W(0) = |d|^{3/2} (1 + N^{-1}) (1 - N^{-(r+1)}).
  const sqrt_val w0 = ((1 + ninv) * (1 - rat_pow(ninv, r + 1))) * half32;
  const rational zeta_ratio = rat_pow(ninv, 2) / (1 - rat_pow(ninv, 2));
  sqrt_val b = (zeta_ratio - delta) * w0;
  b += ((1 + ninv) / (2 * (1 - ninv)) * b_r(N, r)) * half32;
  b += ((1 - rat_pow(ninv, delta)) / (N - 1)) * half32;
  return {sqrt_val::zero(N), b};
}

log_val whittaker_split_deriv_combo_symbolic(long long N, int delta, int r) {
  whittaker_form f = whittaker_split_form(N, delta, r);
  // W'(0) - (1/2) log|a| W(0) with log|a| = -r log N.
  log_val combo = f.deriv0();
  combo += log_val{sqrt_val::zero(N), rational(r, 2) * f.value0()};
  return combo;
}

log_val whittaker_nonsplit_deriv0(long long N, int delta, int r) {
  return whittaker_nonsplit_form(N, delta, r).deriv0();
}

rational division_unit_volume(long long N, int delta) {
  require_place(N, delta);
  return rat_pow(rational(N), -2 * delta - 1) * (1 - rat_pow(rational(N), -2));
}

sqrt_val siegel_weil_whittaker(long long N, int delta, int r, algebra_kind kind,
                               bool u_unit) {
  require_place(N, delta);
  if (!u_unit || r < 0)
    return sqrt_val::zero(N);
  const rational ninv(1, N);
  const sqrt_val half32 = sqrt_val::half_pow(N, -3 * delta);
  if (kind == algebra_kind::matrix_split)
    return (ninv * (1 + ninv) * (rational(N) - rat_pow(ninv, r))) * half32;
  return (-(ninv * (1 + ninv) * rat_pow(ninv, r))) * half32;
}

std::pair<sqrt_val, sqrt_val> wall_crossing_pair(long long N, int delta) {
  require_place(N, delta);
  const rational k(N, N + 1); // 1/(1 + N^{-1})
  sqrt_val cp = k * sqrt_val::half_pow(N, 3 * delta);
  return {cp, -cp};
}

check_result fourier_inversion_check(long long N, int delta) {
  require_place(N, delta);
  auto [cp, cm] = wall_crossing_pair(N, delta);
  // Central values of the two full-order sections at r = 0 sit at
  // +|d|^2 (matrix) and -|d|^2 N^{-1} (division) after the a-integration.
  sqrt_val rhs = cp * sqrt_val(N, rat_pow(rational(N), -2 * delta), 0) +
                 cm * sqrt_val(N, -rat_pow(rational(N), -2 * delta - 1), 0);
  sqrt_val lhs = sqrt_val::half_pow(N, -delta); // vol(O)
  return make_check("fourier_inversion N=" + std::to_string(N) +
                        " delta=" + std::to_string(delta),
                    lhs.value(), rhs.value(), 0.0, lhs == rhs);
}

check_result nonsplit_integral_check(long long N, int delta) {
  require_place(N, delta);
  const rational vol = division_unit_volume(N, delta);
  // integral over a of W_a(s): the slice v(a) = r has measure
  // |d|^{1/2} N^{-r} (1 - N^{-1}); the polynomial parts for r >= 1 coincide,
  // so their geometric weights fold into 1/(N - 1).
  poly bracket;
  for (int r = -delta; r <= -1; ++r)
    bracket += rat_pow(rational(N), -r) * whittaker_nonsplit_form(N, delta, r).P;
  bracket += whittaker_nonsplit_form(N, delta, 0).P;
  bracket += rational(1, N - 1) * whittaker_nonsplit_form(N, delta, 1).P;
  // I(t) = -vol * N^{-delta} (1 - N^{-1}) * bracket(t); s-independence and
  // the value -vol both reduce to this polynomial identity.
  poly scaled = (rat_pow(rational(N), -delta) * (1 - rational(1, N))) * bracket;
  const bool pass = scaled == poly::constant(rational(1));
  const double lhs = -to_double(vol) * scaled.eval(1.0 / static_cast<double>(N));
  return make_check("nonsplit_integral N=" + std::to_string(N) +
                        " delta=" + std::to_string(delta),
                    lhs, -to_double(vol), 0.0, pass);
}

intertwining_result intertwining_w_value(long long N, int delta) {
  require_place(N, delta);
  intertwining_result res;
  res.w_phi = sqrt_val(N, -division_unit_volume(N, delta), 0);
  res.c_ratio = (delta % 2 == 0)
                    ? log_val{sqrt_val::zero(N), sqrt_val(N, rational(1 - N, 1 + N), 0)}
                    : log_val::zero(N);
  return res;
}

log_val averaged_kbar_ratio(long long N, int delta) {
  require_place(N, delta);
  rational k = (delta % 2 == 0) ? rational(N, N + 1) + rational(delta, 2)
                                : rational(delta + 1, 2);
  return {sqrt_val::zero(N), sqrt_val(N, -k, 0)};
}

averaged_j_result averaged_j_w(long long N, int delta) {
  require_place(N, delta);
  averaged_j_result res;
  res.ratio = -rational(N - 1, 4 * (N + 1));
  const rational ninv(1, N);
  res.integral =
      sqrt_val(N, rational(1, 4) * rat_pow(ninv, 2 * delta) * ninv * rat_pow(1 - ninv, 2), 0);
  // The integral normalized by vol(O_B^x) must reproduce the ratio.
  if (res.integral.c / division_unit_volume(N, delta) != -res.ratio)
    throw verification_error("averaged level-raising section: integral and ratio disagree");
  return res;
}

std::pair<rational, rational> component_weights(long long N) {
  if (N < 2)
    throw domain_error("residue norm must be at least 2");
  // Solve A0 + A1 = 0, (N + 1)(A0 - A1) = 1/2.
  rational a0 = rational(1, 4 * (N + 1));
  return {a0, -a0};
}

log_val hecke_hodge_defect(long long N, int delta, int r, bool u_unit) {
  require_place(N, delta);
  if (r < 0)
    throw domain_error("Hecke defect requires r >= 0");
  if (!u_unit)
    return log_val::zero(N);
  const rational ninv(1, N);
  sqrt_val b = ((1 + ninv) / (1 - ninv) * b_r(N, r)) * sqrt_val::half_pow(N, -3 * delta);
  return {sqrt_val::zero(N), b};
}

log_val hecke_hodge_defect_counted(long long N, int delta, int r, bool u_unit) {
  require_place(N, delta);
  if (r < 0)
    throw domain_error("Hecke defect requires r >= 0");
  if (!u_unit)
    return log_val::zero(N);
  // sigma_1(N^r) from the sublattice enumeration when N is prime; the
  // geometric sum otherwise (N = p^2 places).
  rational sigma1 = 0;
  if (is_prime(N)) {
    sigma1 = oracle::hecke_coset_count(N, r);
  } else {
    rational pw = 1;
    for (int i = 0; i <= r; ++i) {
      sigma1 += pw;
      pw *= N;
    }
  }
  rational z = rational(r) * sigma1;
  rational pw = rat_pow(rational(N), r);
  for (int i = 0; i <= r; ++i) {
    z -= 2 * rational(i) * pw;
    pw /= N;
  }
  const rational ninv(1, N);
  sqrt_val b = ((1 + ninv) * (1 - ninv) * rat_pow(ninv, r) * z) *
               sqrt_val::half_pow(N, -3 * delta);
  return {sqrt_val::zero(N), b};
}

check_result cancellation_split(long long N, int delta, int r) {
  log_val lhs = whittaker_split_deriv_combo_symbolic(N, delta, r);
  lhs -= rational(1, 2) * hecke_hodge_defect_counted(N, delta, r);
  const rational ninv(1, N);
  const rational zeta_ratio = rat_pow(ninv, 2) / (1 - rat_pow(ninv, 2));
  const sqrt_val w0 = whittaker_split_form(N, delta, r).value0();
  sqrt_val b = (zeta_ratio - delta) * w0;
  b += ((1 - rat_pow(ninv, delta)) / (N - 1)) * sqrt_val::half_pow(N, -3 * delta);
  log_val rhs{sqrt_val::zero(N), b};
  return make_check("cancellation N=" + std::to_string(N) + " delta=" +
                        std::to_string(delta) + " r=" + std::to_string(r),
                    lhs.value(), rhs.value(), 0.0, lhs == rhs);
}

rational alpha_constant(long long N) {
  if (N < 2)
    throw domain_error("residue norm must be at least 2");
  const rational expected(N + 3, 2 * (N + 1));
  for (int delta = 0; delta <= 3; ++delta) {
    log_val lhs = rational(-2) * averaged_kbar_ratio(N, delta);
    lhs += log_val{sqrt_val::zero(N),
                   sqrt_val(N, 2 * averaged_j_w(N, delta).ratio, 0)};
    lhs += intertwining_w_value(N, delta).c_ratio;
    // Must equal (delta + alpha) log N.
    if (!lhs.a.is_zero())
      throw verification_error("intertwining assembly produced a non-log term");
    rational alpha = lhs.b.c - delta;
    if (alpha != expected)
      throw verification_error("intertwining assembly gave an unexpected constant");
  }
  return expected;
}

rational local_height_coefficient(long long N) {
  const rational ninv(1, N);
  rational lhs = alpha_constant(N) + 2 * rat_pow(ninv, 2) / (1 - rat_pow(ninv, 2)) + 1;
  rational rhs(3 * N - 1, 2 * (N - 1));
  if (lhs != rhs)
    throw verification_error("local height coefficient identity failed");
  return rhs;
}

} // namespace hc::local
