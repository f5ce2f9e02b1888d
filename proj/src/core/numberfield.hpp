#pragma once

// Base fields (Q and real quadratic Q(sqrt D)), prime splitting, and
// ramification sets for the quaternion algebras whose heights we compute.

#include "core/errors.hpp"
#include "core/exactval.hpp"

#include <string>
#include <vector>

namespace hc {

enum class field_kind { rationals, real_quadratic };

struct number_field {
  field_kind kind = field_kind::rationals;
  int degree = 1;
  long long radicand = 0;    // squarefree D > 1 for Q(sqrt D)
  long long disc = 1;        // field discriminant d_F
  long long class_number = 1;
};

// Grammar: "Q" or "Q(sqrt D)" with D squarefree and > 1.
number_field parse_field(const std::string &text);
std::string render_field(const number_field &f);

enum class split_type { split, inert, ramified };

// A finite place of the base field lying over a rational prime.
struct finite_place {
  long long p = 0;
  split_type type = split_type::inert;
  int residue_degree = 1;   // f
  int ram_index = 1;        // e
  long long norm = 0;       // p^f, the local residue norm N_v
  int different_val = 0;    // valuation of the local different
  int conj_index = 0;       // 0 or 1, distinguishing the two places over a split prime
};

split_type splitting(const number_field &f, long long p);
std::vector<finite_place> places_above(const number_field &f, long long p);

// The finite ramification set Sigma_f of a quaternion algebra over the field.
struct ramification_set {
  std::vector<finite_place> places;

  std::size_t size() const { return places.size(); }
  // Product of residue norms; the reduced discriminant has this norm.
  long long norm_discriminant() const;
  // A totally definite-at-infinity algebra over a degree-n field needs
  // |Sigma_f| + n to be odd.
  bool parity_ok(const number_field &f) const;
};

// Text form: comma-separated entries "p" or "p:sel" with sel in
// {split1, split2, inert, ram}.  A selector, when present, must match the
// actual splitting; a split prime requires one to pick the place.
ramification_set parse_ramified(const number_field &f, const std::string &text);
std::string render_ramified(const ramification_set &s);

int kronecker_symbol(long long a, long long n);
bool is_prime(long long n);
bool is_squarefree(long long n);
bool is_fundamental_discriminant(long long d);

} // namespace hc
