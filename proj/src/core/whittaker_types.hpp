#pragma once

// Shared parameter block for local Whittaker computations at a finite place.

namespace hc {

enum class algebra_kind { matrix_split, division_nonsplit };

struct whittaker_spec {
  long long N = 2;      // residue norm of the place
  int delta = 0;        // valuation of the local different, >= 0
  int r = 0;            // valuation of the additive parameter a
  bool u_unit = true;   // whether the similitude parameter u is a unit
  algebra_kind algebra = algebra_kind::matrix_split;
};

} // namespace hc
