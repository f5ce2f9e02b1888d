#include "core/heights.hpp"

#include "core/errors.hpp"
#include "core/lfunc.hpp"
#include "core/local_nonarch.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>

namespace hc::ht {

namespace {

void require_definite(const number_field &f, const ramification_set &sigma) {
  if (!sigma.parity_ok(f))
    throw domain_error("ramification set must have |sigma| + degree odd");
}

std::string place_label(const finite_place &v) {
  std::string s = "local " + std::to_string(v.p);
  switch (v.type) {
  case split_type::split:
    s += ":split" + std::to_string(v.conj_index + 1);
    break;
  case split_type::inert:
    if (v.residue_degree == 2)
      s += ":inert";
    break;
  case split_type::ramified:
    s += ":ram";
    break;
  }
  return s;
}

// (3 N - 1)/(4 (N - 1)) log N; half the verified local assembly constant.
double modular_local_term(const finite_place &v) {
  const rational c = local::local_height_coefficient(v.norm) / 2;
  return to_double(c) * std::log(static_cast<double>(v.norm));
}

double sum_terms(const std::vector<height_term> &terms) {
  double s = 0;
  for (const auto &t : terms)
    s += t.value;
  return s;
}

} // namespace

height_result modular_height(const number_field &f, const ramification_set &sigma) {
  require_definite(f, sigma);
  height_result r;
  r.route = height_route::via_minus_one;
  r.terms.push_back({"zeta", -lf::zeta_log_deriv_at_minus1(f)});
  r.terms.push_back({"degree", -f.degree / 2.0});
  for (const auto &v : sigma.places)
    r.terms.push_back({place_label(v), modular_local_term(v)});
  r.value = sum_terms(r.terms);
  return r;
}

height_result modular_height_via_s2(const number_field &f, const ramification_set &sigma) {
  require_definite(f, sigma);
  const double two_pi = 2 * boost::math::constants::pi<double>();
  height_result r;
  r.route = height_route::via_two;
  r.terms.push_back({"zeta", lf::zeta_log_deriv_at2(f)});
  r.terms.push_back({"discriminant", std::log(static_cast<double>(f.disc))});
  r.terms.push_back(
      {"archimedean", -f.degree * (lf::euler_gamma() + std::log(two_pi) - 0.5)});
  for (const auto &v : sigma.places)
    r.terms.push_back({place_label(v), modular_local_term(v)});
  r.value = sum_terms(r.terms);
  return r;
}

rational vigneras_degree(const number_field &f, const ramification_set &sigma) {
  require_definite(f, sigma);
  rational deg = 4 * rational(f.class_number) * rat_pow(rational(-2), -f.degree) *
                 lf::zeta_value_at_minus1(f);
  for (const auto &v : sigma.places)
    deg *= v.norm - 1;
  return deg;
}

double cm_height_from_disc(long long d_e, long long d_b) {
  if (d_e >= 0 || !is_fundamental_discriminant(d_e))
    throw domain_error("cm height: need a negative fundamental discriminant");
  if (d_b < 1)
    throw domain_error("cm height: quaternion discriminant must be positive");
  return cm_height_supplied(lf::l_log_deriv_at0(d_e), static_cast<double>(d_b),
                            static_cast<double>(-d_e));
}

double cm_height_supplied(double l_ratio, double d_b, double d_ef) {
  if (!(d_b > 0) || !(d_ef > 0))
    throw domain_error("cm height: discriminants must be positive");
  return -l_ratio + 0.5 * std::log(d_b / d_ef);
}

height_result kry_height(const number_field &f, const ramification_set &sigma) {
  if (f.kind != field_kind::rationals)
    throw domain_error("hodge normalization is defined over Q");
  if (sigma.size() % 2 != 0)
    throw domain_error("hodge normalization needs an even ramification set");
  height_result r;
  r.route = height_route::via_minus_one;
  r.terms.push_back({"zeta", -lf::zeta_log_deriv_at_minus1(f)});
  r.terms.push_back({"degree", -0.5});
  for (const auto &v : sigma.places) {
    const double c = static_cast<double>(v.norm + 1) / (4.0 * (v.norm - 1));
    r.terms.push_back({place_label(v), c * std::log(static_cast<double>(v.norm))});
  }
  r.value = sum_terms(r.terms);
  return r;
}

} // namespace hc::ht
