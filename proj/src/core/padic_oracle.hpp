#pragma once

// Brute-force p-adic integration oracle.  Whittaker values are recomputed
// from first principles as lattice-point counts for the quadric q(x) = det
// (split matrix order) or q(x) = reduced norm (division order), with no use
// of the closed forms under test.  Exact rationals throughout.

#include "core/exactval.hpp"
#include "core/whittaker_types.hpp"

#include <cstdint>

namespace hc::oracle {

// Quaternion order model over Z_p with a fixed coordinate basis.
//   matrix_split:      M_2(Z_p), q = x0*x3 - x1*x2
//   division_nonsplit: O_E + O_E*j with E/Q_p unramified quadratic, j^2 = p;
//                      q(x + y j) = Nm(x) - p*Nm(y),
//                      Nm(x0 + x1 t) = x0^2 + eps*x0*x1 - c*x1^2
//                      where t generates O_E with t^2 = eps*t + c.
struct order_model {
  algebra_kind kind = algebra_kind::matrix_split;
  long long p = 2;
  long long eps = 0; // division only
  long long c = 0;   // division only
};

order_model make_model(algebra_kind kind, long long p);

// #{x in (Z/p^k)^4 : q(x) = target mod p^m}, m <= k, by direct enumeration.
// With units_only, only points whose q-value is a unit mod p are kept (for
// both orders this is equivalent to invertibility in the order mod p).
// Throws domain_error if p^{4k} exceeds the iteration budget.
std::uint64_t count_quadric(const order_model &m, int k, long long target, int mod_pow,
                            bool units_only,
                            std::uint64_t budget = 200'000'000ULL);

// Density of {q = target mod p^m} inside the full coordinate cube, i.e.
// count / p^{4m}, computed by convolution of 2x2-block value distributions
// rather than a 4-dimensional scan.  m >= 1.
rational quadric_density(const order_model &m, int mod_pow, long long target,
                         bool units_only);

// Exact Whittaker value at integer s >= 1 assembled from counted volumes of
// the dyadic level sets D_n = {x in supp : u q(x) = a mod p^{n - delta}}.
// supp is the full matrix order for the split case and the unit group for
// the division case.  f = 1 places only (N = p prime).
sqrt_val whittaker_oracle(const whittaker_spec &spec, long s_int);

// Number of sublattices of Z_p^2 of index p^r (Hermite-form enumeration);
// equals sigma_1(p^r) = 1 + p + ... + p^r.
long long hecke_coset_count(long long p, int r);

struct unit_volume_report {
  rational sl2_density;      // #{det = 1 mod p^k} / p^{3k}
  rational sl2_expected;     // 1 - p^{-2}
  rational norm_one_density; // #{q = 1 mod p^k} / p^{3k+1}
  rational norm_one_expected; // p^{-1} (1 + p^{-1})
  bool stable_in_k = false;  // k = 2 and k = 3 agree
  bool pass = false;
};

unit_volume_report unit_volume_check(long long p);

} // namespace hc::oracle
