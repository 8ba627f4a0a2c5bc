#include <doctest.h>

#include "lstab/set_literal.hpp"
#include "lstab/stability.hpp"

using namespace lstab;

TEST_CASE("left stability") {
  CHECK(is_left_stable(IntSet{0, 3, 4}).stable);
  CHECK(is_left_stable(IntSet{0}).stable);
  const auto r = is_left_stable(IntSet{0, 1, 4});
  CHECK_FALSE(r.stable);
  REQUIRE(r.witness);
  CHECK(r.witness->sum == 2);
  CHECK_THROWS_WITH_AS(is_left_stable(IntSet{1, 2}), "not anchored at 0", Error);
  CHECK(is_left_stable(parse_set_literal("0,11-13,22-26,33-48")).stable);
  CHECK(is_left_stable(parse_set_literal("0,10-12,20-24,30-36,40-48")).stable);
}

TEST_CASE("h_disc fixtures") {
  CHECK(h_disc(48, 13).k == 4);
  CHECK(h_disc(48, 13).value == 3);
  CHECK(h_disc(48, 12).k == 5);
  CHECK(h_disc(48, 12).value == 3);
  CHECK(h_disc(48, 48).value == 24);
  CHECK(h_disc(4, 2).k == 3);
  CHECK(h_disc(4, 2).value == 1);
  CHECK(h_disc(9, 4).value == 1);
  CHECK_THROWS_WITH_AS(h_disc(48, 1), "x out of range", Error);
  CHECK_THROWS_WITH_AS(h_disc(48, 49), "x out of range", Error);
}

TEST_CASE("h_disc is monotone") {
  for (std::int64_t n = 3; n <= 120; ++n) CHECK(h_disc_monotone_scan(n));
}

TEST_CASE("lemma bound") {
  // gcd(A ∩ [0,4]) = 2 here; the returned bound is below |A_4| = 3.
  const IntSet a{0, 2, 4, 6, 8, 9};
  CHECK(lemma_disc_bound(a, 4, 2) == Rational(8, 3));
  CHECK(a.prefix_count(4) == 3);
  CHECK_THROWS_AS(lemma_disc_bound(IntSet{0, 1, 4}, 1, 2), Error);
  CHECK_THROWS_AS(lemma_disc_bound(a, 5, 2), Error);
}

TEST_CASE("extremal construction") {
  CHECK(construct_extremal_disc(48, 13) == parse_set_literal("0,11-13,22-26,33-48"));
  const auto l = extremal_disc_layout(48, 13);
  CHECK(l.k == 4);
  CHECK(l.h == 3);
  CHECK(l.all_ok());
  // Small n where the sandwich breaks; stability and the prefix count survive.
  const auto bad = extremal_disc_layout(6, 3);
  CHECK_FALSE(bad.sandwich());
  CHECK(bad.stable);
  CHECK(bad.prefix_ok);
  CHECK_THROWS_AS(construct_extremal_disc(6, 3), InconsistencyError);
}
