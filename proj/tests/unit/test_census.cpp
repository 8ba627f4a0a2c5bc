#include <doctest.h>

#include <set>

#include "lstab/census.hpp"
#include "lstab/stability.hpp"

using namespace lstab;

namespace {

// Filters every subset of [1, n-1]; independent of the search.
std::vector<IntSet> naive(std::int64_t n) {
  std::vector<IntSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::int64_t> e{0, n};
    for (std::int64_t i = 1; i < n; ++i) {
      if (mask >> (i - 1) & 1) e.push_back(i);
    }
    const IntSet s = IntSet::from_elements(e);
    if (is_left_stable(s).stable) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("small enumerations") {
  const auto two = enumerate_left_stable(2, EnumerateConstraints{});
  REQUIRE(two.size() == 2);
  CHECK(std::set<IntSet>(two.begin(), two.end()) == std::set<IntSet>{IntSet{0, 2}, IntSet{0, 1, 2}});
  EnumerateConstraints c;
  c.require_cardinality = 3;
  c.require_gcd1 = true;
  const auto four = enumerate_left_stable(4, c);
  REQUIRE(four.size() == 1);
  CHECK(four[0] == IntSet{0, 3, 4});
}

TEST_CASE("enumeration counts") {
  const std::int64_t expected[] = {2, 3, 5, 7, 12, 16, 27, 37, 58, 80, 131, 171, 277, 380, 580, 785, 1250, 1655, 2616};
  for (std::int64_t n = 2; n <= 20; ++n) {
    std::int64_t count = 0;
    enumerate_left_stable(n, EnumerateConstraints{}, [&](const IntSet&) { ++count; });
    CHECK_MESSAGE(count == expected[n - 2], "n=" << n);
  }
}

TEST_CASE("enumeration equals naive filter") {
  for (std::int64_t n = 2; n <= 12; ++n) {
    const auto fast = enumerate_left_stable(n, EnumerateConstraints{});
    const auto slow = naive(n);
    CHECK(std::set<IntSet>(fast.begin(), fast.end()) == std::set<IntSet>(slow.begin(), slow.end()));
  }
}

TEST_CASE("theorem class sizes") {
  const std::size_t expected[] = {0, 1, 1, 2, 3, 4, 6, 7, 11, 12, 22, 23, 38, 39, 66, 67, 117, 118, 203};
  for (std::int64_t n = 2; n <= 20; ++n) CHECK_MESSAGE(theorem_class(n).size() == expected[n - 2], "n=" << n);
}

TEST_CASE("parallel enumeration keeps order") {
  CensusOptions serial;
  CensusOptions par;
  par.jobs = 3;
  par.split_depth = 6;
  CHECK(theorem_class(20, serial) == theorem_class(20, par));
}

TEST_CASE("sharpness census") {
  const auto r = sharpness_census(4, 2);
  CHECK(r.bound == 2);
  CHECK(r.achieved_max == 1);
  CHECK_FALSE(r.sharp());
  const auto e = sharpness_census(9, 4);
  CHECK(e.bound == 2);
  CHECK(e.achieved_max == 3);
  CHECK(e.exceeds_bound());
  CHECK(std::find(e.extremal_sets.begin(), e.extremal_sets.end(), IntSet{0, 2, 4, 6, 8, 9}) !=
        e.extremal_sets.end());
  CHECK(sharpness_census(2, 2).empty_class());
  CHECK(census_csv_header() == "n,x,bound,achieved_max,num_extremal,total_enumerated");
}

TEST_CASE("two extremal sets for (48, 13)") {
  const auto r = verify_remark_sets();
  CHECK(r.result == Verdict::kPass);
  CHECK(r.get("A_PREFIX_13") == "4");
  CHECK(r.get("B_PREFIX_13") == "4");
}
