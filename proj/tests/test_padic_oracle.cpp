#include "core/errors.hpp"
#include "core/padic_oracle.hpp"

#include <doctest.h>

using namespace hc;
using namespace hc::oracle;

TEST_CASE("count_quadric agrees with the convolution density") {
  for (long long p : {2LL, 3LL}) {
    for (int kind_i = 0; kind_i < 2; ++kind_i) {
      const auto kind =
          kind_i ? algebra_kind::division_nonsplit : algebra_kind::matrix_split;
      const auto m = make_model(kind, p);
      for (int mod_pow = 1; mod_pow <= 2; ++mod_pow) {
        for (long long target : {0LL, 1LL, p}) {
          for (bool units : {false, true}) {
            const auto direct = count_quadric(m, mod_pow, target, mod_pow, units);
            const rational dens = quadric_density(m, mod_pow, target, units);
            const rational total = rat_pow(rational(p), 4 * mod_pow);
            CAPTURE(p);
            CAPTURE(kind_i);
            CAPTURE(mod_pow);
            CAPTURE(target);
            CAPTURE(units);
            CHECK(rational(direct) == dens * total);
          }
        }
      }
    }
  }
}

TEST_CASE("count_quadric scales with the ambient level") {
  const auto m = make_model(algebra_kind::matrix_split, 2);
  const auto at2 = count_quadric(m, 2, 1, 2, false);
  const auto at3 = count_quadric(m, 3, 1, 2, false);
  CHECK(at3 == at2 * 16); // one extra digit in each of the 4 coordinates
}

TEST_CASE("count_quadric respects its iteration budget") {
  const auto m = make_model(algebra_kind::matrix_split, 5);
  CHECK_THROWS_AS(count_quadric(m, 4, 1, 2, false, 1000), domain_error);
}

TEST_CASE("whittaker oracle: frozen split values") {
  // delta = 0, r = 0: W(t) = 1 - t/N^2 at t = N^{-s}.
  whittaker_spec spec;
  spec.algebra = algebra_kind::matrix_split;
  spec.N = 2;
  CHECK(whittaker_oracle(spec, 1) == sqrt_val(2, rational(7, 8), 0));
  CHECK(whittaker_oracle(spec, 2) == sqrt_val(2, rational(15, 16), 0));
  spec.N = 3;
  CHECK(whittaker_oracle(spec, 1) == sqrt_val(3, rational(26, 27), 0));

  // delta = 0, r = 1, N = 2: W(t) = 1 + t/4 - t^2/8.
  spec.N = 2;
  spec.r = 1;
  CHECK(whittaker_oracle(spec, 1) == sqrt_val(2, rational(35, 32), 0));
  CHECK(whittaker_oracle(spec, 2) == sqrt_val(2, rational(135, 128), 0));
}

TEST_CASE("whittaker oracle: frozen division values") {
  // delta = 0, r = 0: W = -vol * (1 - t + N t/(N-1)) with vol = (1-N^-2)/N.
  whittaker_spec spec;
  spec.algebra = algebra_kind::division_nonsplit;
  spec.N = 3;
  CHECK(whittaker_oracle(spec, 1) == sqrt_val(3, rational(-28, 81), 0));
  // delta = 0, r = 1: W = -vol * (1 - t).
  spec.r = 1;
  CHECK(whittaker_oracle(spec, 2) == sqrt_val(3, rational(-64, 243), 0));
  // unsupported: r < -delta.
  spec.r = -1;
  CHECK(whittaker_oracle(spec, 1).is_zero());
}

TEST_CASE("whittaker oracle: non-unit similitude vanishes") {
  whittaker_spec spec;
  spec.u_unit = false;
  spec.N = 2;
  spec.r = 1;
  spec.algebra = algebra_kind::matrix_split;
  CHECK(whittaker_oracle(spec, 1).is_zero());
  spec.algebra = algebra_kind::division_nonsplit;
  CHECK(whittaker_oracle(spec, 1).is_zero());
}

TEST_CASE("hecke coset counts are sigma_1(p^r)") {
  CHECK(hecke_coset_count(2, 0) == 1);
  CHECK(hecke_coset_count(2, 1) == 3);
  CHECK(hecke_coset_count(2, 3) == 15);
  CHECK(hecke_coset_count(3, 2) == 13);
  CHECK(hecke_coset_count(5, 2) == 31);
  CHECK(hecke_coset_count(7, 1) == 8);
}

TEST_CASE("unit volume report") {
  for (long long p : {2LL, 3LL}) {
    const auto rep = unit_volume_check(p);
    CAPTURE(p);
    CHECK(rep.pass);
    CHECK(rep.stable_in_k);
    CHECK(rep.sl2_density == rational(p * p - 1, p * p));
    CHECK(rep.norm_one_density == rational(p + 1, p * p));
  }
}
