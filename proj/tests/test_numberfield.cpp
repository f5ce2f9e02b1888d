#include "core/errors.hpp"
#include "core/numberfield.hpp"

#include <doctest.h>

using namespace hc;

TEST_CASE("parse_field accepts Q and real quadratic fields") {
  auto q = parse_field("Q");
  CHECK(q.kind == field_kind::rationals);
  CHECK(q.degree == 1);
  CHECK(q.disc == 1);
  CHECK(render_field(q) == "Q");

  auto f5 = parse_field("Q(sqrt 5)");
  CHECK(f5.kind == field_kind::real_quadratic);
  CHECK(f5.degree == 2);
  CHECK(f5.radicand == 5);
  CHECK(f5.disc == 5); // 5 = 1 mod 4
  CHECK(render_field(f5) == "Q(sqrt 5)");

  auto f2 = parse_field("Q(sqrt 2)");
  CHECK(f2.disc == 8); // 2 = 2 mod 4 -> 4D

  auto f3 = parse_field(" Q ( sqrt  3 ) ");
  CHECK(f3.radicand == 3);
  CHECK(f3.disc == 12);
  CHECK(parse_field(" q ").kind == field_kind::rationals);
}

TEST_CASE("parse_field rejects bad input") {
  CHECK_THROWS_AS(parse_field("Q(sqrt 4)"), domain_error);  // not squarefree
  CHECK_THROWS_AS(parse_field("Q(sqrt 12)"), domain_error); // not squarefree
  CHECK_THROWS_AS(parse_field("Q(sqrt 1)"), domain_error);
  CHECK_THROWS_AS(parse_field("Q(sqrt -3)"), domain_error);
  CHECK_THROWS_AS(parse_field("E8"), domain_error);
  CHECK_THROWS_AS(parse_field(""), domain_error);
}

TEST_CASE("splitting of rational primes") {
  auto f5 = parse_field("Q(sqrt 5)");
  CHECK(splitting(f5, 2) == split_type::inert);
  CHECK(splitting(f5, 3) == split_type::inert);
  CHECK(splitting(f5, 5) == split_type::ramified);
  CHECK(splitting(f5, 7) == split_type::inert);
  CHECK(splitting(f5, 11) == split_type::split);
  CHECK(splitting(f5, 13) == split_type::inert);
  CHECK(splitting(f5, 19) == split_type::split);

  auto f2 = parse_field("Q(sqrt 2)");
  CHECK(splitting(f2, 2) == split_type::ramified);
  CHECK(splitting(f2, 3) == split_type::inert);
  CHECK(splitting(f2, 5) == split_type::inert);
  CHECK(splitting(f2, 7) == split_type::split);
  CHECK(splitting(f2, 17) == split_type::split);

  CHECK_THROWS_AS(splitting(f2, 6), domain_error);
}

TEST_CASE("places_above carries norms and different valuations") {
  auto f2 = parse_field("Q(sqrt 2)");

  auto ram = places_above(f2, 2);
  REQUIRE(ram.size() == 1);
  CHECK(ram[0].type == split_type::ramified);
  CHECK(ram[0].norm == 2);
  CHECK(ram[0].ram_index == 2);
  CHECK(ram[0].different_val == 3); // v_2(disc) = v_2(8)

  auto inert = places_above(f2, 3);
  REQUIRE(inert.size() == 1);
  CHECK(inert[0].norm == 9);
  CHECK(inert[0].residue_degree == 2);
  CHECK(inert[0].different_val == 0);

  auto split = places_above(f2, 7);
  REQUIRE(split.size() == 2);
  CHECK(split[0].norm == 7);
  CHECK(split[1].norm == 7);
  CHECK(split[0].conj_index == 0);
  CHECK(split[1].conj_index == 1);

  auto f5 = parse_field("Q(sqrt 5)");
  auto ram5 = places_above(f5, 5);
  REQUIRE(ram5.size() == 1);
  CHECK(ram5[0].different_val == 1); // odd ramified prime

  auto q = parse_field("Q");
  auto qp = places_above(q, 11);
  REQUIRE(qp.size() == 1);
  CHECK(qp[0].norm == 11);
  CHECK(qp[0].residue_degree == 1);
}

TEST_CASE("ramification set parsing and rendering") {
  auto q = parse_field("Q");
  auto s = parse_ramified(q, "3, 2");
  REQUIRE(s.size() == 2);
  CHECK(s.places[0].p == 2); // sorted by prime
  CHECK(s.places[1].p == 3);
  CHECK(s.norm_discriminant() == 6);
  CHECK(render_ramified(s) == "2, 3");
  CHECK(s.parity_ok(q)); // |sigma| + n = 2 + 1 is odd
}

TEST_CASE("ramification set parity") {
  auto q = parse_field("Q");
  CHECK(parse_ramified(q, "2,3").parity_ok(q));
  CHECK(parse_ramified(q, "").parity_ok(q));
  CHECK_FALSE(parse_ramified(q, "2").parity_ok(q));

  auto f5 = parse_field("Q(sqrt 5)");
  CHECK(parse_ramified(f5, "2").parity_ok(f5));
  CHECK_FALSE(parse_ramified(f5, "2,3").parity_ok(f5));
}

TEST_CASE("ramification set selectors") {
  auto f5 = parse_field("Q(sqrt 5)");
  auto s = parse_ramified(f5, "11:split2,2:inert,5:ram");
  REQUIRE(s.size() == 3);
  CHECK(s.places[0].p == 2);
  CHECK(s.places[1].p == 5);
  CHECK(s.places[2].p == 11);
  CHECK(s.places[2].conj_index == 1);
  CHECK(s.norm_discriminant() == 4 * 5 * 11);
  // Only split places need a selector when rendered back.
  CHECK(render_ramified(s) == "2, 5, 11:split2");

  auto both = parse_ramified(f5, "11:split1,11:split2");
  CHECK(both.size() == 2);
  CHECK(both.norm_discriminant() == 121);
}

TEST_CASE("ramification set rejects invalid entries") {
  auto q = parse_field("Q");
  auto f5 = parse_field("Q(sqrt 5)");
  CHECK_THROWS_AS(parse_ramified(q, "4"), domain_error);         // not prime
  CHECK_THROWS_AS(parse_ramified(q, "2,2"), domain_error);       // duplicate
  CHECK_THROWS_AS(parse_ramified(q, "2:split1"), domain_error);  // selector over Q
  CHECK_THROWS_AS(parse_ramified(f5, "11"), domain_error);       // needs selector
  CHECK_THROWS_AS(parse_ramified(f5, "3:split1"), domain_error); // 3 is inert
  CHECK_THROWS_AS(parse_ramified(f5, "5:inert"), domain_error);  // 5 ramifies
  CHECK_THROWS_AS(parse_ramified(f5, "2:nope"), domain_error);
  CHECK_THROWS_AS(parse_ramified(f5, "11:split1,11:split1"), domain_error);
  CHECK_THROWS_AS(parse_ramified(q, "2,,3"), domain_error);
}

TEST_CASE("kronecker symbol") {
  // squares and non-squares mod 11
  CHECK(kronecker_symbol(3, 11) == 1);
  CHECK(kronecker_symbol(2, 11) == -1);
  CHECK(kronecker_symbol(11, 11) == 0);
  // (2/p) by p mod 8
  CHECK(kronecker_symbol(2, 7) == 1);
  CHECK(kronecker_symbol(2, 3) == -1);
  // (-1/p) by p mod 4
  CHECK(kronecker_symbol(-1, 5) == 1);
  CHECK(kronecker_symbol(-1, 7) == -1);
  // discriminant-style arguments
  CHECK(kronecker_symbol(5, 11) == 1);
  CHECK(kronecker_symbol(8, 7) == 1);
  CHECK(kronecker_symbol(8, 3) == -1);
  CHECK(kronecker_symbol(-4, 5) == 1);
  CHECK(kronecker_symbol(-4, 3) == -1);
}

TEST_CASE("primality and discriminant predicates") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91)); // 7 * 13
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK(is_fundamental_discriminant(-4));
  CHECK(is_fundamental_discriminant(-3));
  CHECK(is_fundamental_discriminant(-8));
  CHECK(is_fundamental_discriminant(-7));
  CHECK(is_fundamental_discriminant(5));
  CHECK(is_fundamental_discriminant(8));
  CHECK_FALSE(is_fundamental_discriminant(-12));
  CHECK_FALSE(is_fundamental_discriminant(-9));
  CHECK_FALSE(is_fundamental_discriminant(1));
  CHECK_FALSE(is_fundamental_discriminant(7)); // 3 mod 4
}
