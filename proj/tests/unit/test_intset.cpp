#include <doctest.h>

#include "lstab/intset.hpp"
#include "lstab/set_literal.hpp"

using namespace lstab;

TEST_CASE("set literal round trip") {
  const IntSet a = parse_set_literal("0,11-13,22-26,33-48");
  CHECK(a.size() == 25);
  CHECK(a.contains(12));
  CHECK_FALSE(a.contains(14));
  CHECK(format_set_literal(a) == "0,11-13,22-26,33-48");
  CHECK(parse_set_literal(" 3 , 1-2, 2 ") == IntSet{1, 2, 3});
  CHECK(format_set_literal(IntSet{0, 1, 2}, -5) == "-5--3");
  CHECK_THROWS_AS(parse_set_literal("5-3"), Error);
  CHECK_THROWS_AS(parse_set_literal("1,,x"), Error);
  CHECK(parse_int_list("-5--2,3") == std::vector<std::int64_t>{-5, -4, -3, -2, 3});
}

TEST_CASE("sumsets") {
  CHECK(sumset(IntSet{0, 1}, IntSet{0, 2}) == IntSet{0, 1, 2, 3});
  CHECK(sumset(IntSet{0, 3, 4}, IntSet{0, 3, 4}) == IntSet{0, 3, 4, 6, 7, 8});
  CHECK(k_fold_sum(IntSet{0, 3}, 3) == IntSet{0, 3, 6, 9});
  CHECK(k_fold_sum(IntSet{2, 5}, 1) == IntSet{2, 5});
  CHECK_THROWS_AS(k_fold_sum(IntSet{0}, 0), Error);
  // Crosses several 64-bit words.
  const IntSet wide = IntSet::range(60, 70).set_union(IntSet{200});
  const IntSet s = sumset(wide, IntSet{0, 100});
  CHECK(s.size() == 24);
  CHECK(s.contains(170));
  CHECK(s.contains(300));
  CHECK_FALSE(s.contains(171));
}

TEST_CASE("sumset matches pairwise definition") {
  const IntSet a{0, 5, 64, 65, 130};
  const IntSet b{1, 63, 127};
  IntSet naive;
  for (auto x : a.elements()) {
    for (auto y : b.elements()) naive = naive.set_union(IntSet{x + y});
  }
  CHECK(sumset(a, b) == naive);
  CHECK(sumset(b, a) == naive);
}

TEST_CASE("stats and normalize") {
  const auto s = stats(IntSet{4, 8, 10});
  CHECK(s.min == 4);
  CHECK(s.diam == 6);
  CHECK(s.gcd_star == 2);
  CHECK(s.n_a == 3);
  CHECK(stats(IntSet{7}).gcd_star == 1);
  CHECK(normalize(IntSet{3, 7, 11}) == IntSet{0, 1, 2});
  CHECK_THROWS_AS(stats(IntSet{}), Error);
}

TEST_CASE("prefix and window") {
  const IntSet a = parse_set_literal("0,11-13,22-26,33-48");
  CHECK(a.prefix_count(13) == 4);
  CHECK(a.prefix_count(12) == 3);
  CHECK(a.count_in(22, 26) == 5);
  CHECK(a.window(20, 34) == parse_set_literal("22-26,33-34"));
  CHECK(a.reflect(48).contains(0));
  CHECK(a.reflect(48).contains(15));
  CHECK(IntSet{0, 2}.translate(3) == IntSet{3, 5});
}

TEST_CASE("capacity") {
  const auto saved = capacity();
  set_capacity(100);
  CHECK_THROWS_AS(sumset(IntSet{0, 60}, IntSet{0, 60}), Error);
  CHECK_NOTHROW(sumset(IntSet{0, 50}, IntSet{0, 50}));
  set_capacity(saved);
  const std::int64_t neg[] = {-1, 2};
  CHECK_THROWS_AS(IntSet::from_elements(neg), Error);
}
