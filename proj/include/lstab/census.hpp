#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lstab/intset.hpp"
#include "lstab/report.hpp"

namespace lstab {

struct EnumerateConstraints {
  std::optional<std::int64_t> require_cardinality;
  bool require_gcd1 = false;
};

struct CensusOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned jobs = 1;
  /// Membership decisions fixed before the tree is handed to workers.
  int split_depth = 12;
};

/// Largest n accepted by the census without an explicit override.
inline constexpr std::int64_t kDefaultCensusMaxN = 28;

/// Every A ⊆ [0, n] with 0, n ∈ A that is closed under sums not exceeding
/// n, filtered by the constraints. Decisions are taken for 1, 2, ..., n-1 in
/// order with "absent" tried before "present"; the output follows that
/// order no matter how many workers run.
std::vector<IntSet> enumerate_left_stable(std::int64_t n, const EnumerateConstraints& constraints,
                                          const CensusOptions& options = {});

/// Streaming form, single-threaded, same order.
void enumerate_left_stable(std::int64_t n, const EnumerateConstraints& constraints,
                           const std::function<void(const IntSet&)>& visit);

/// Sets meeting the staircase-bound hypotheses: 0 = min, max = n, gcd 1,
/// left-stable, |A| = floor((n+1)/2) + 1.
std::vector<IntSet> theorem_class(std::int64_t n, const CensusOptions& options = {});

struct CensusResult {
  std::int64_t n = 0;
  std::int64_t x = 0;
  std::int64_t bound = 0;         // h_disc(n, x) + 1
  std::int64_t achieved_max = 0;  // max |A ∩ [0, x]| over the class; 0 if empty
  std::vector<IntSet> extremal_sets;
  std::int64_t total_enumerated = 0;

  bool exceeds_bound() const { return achieved_max > bound; }
  bool sharp() const { return achieved_max == bound; }
  bool empty_class() const { return total_enumerated == 0; }
};

/// Census of the class for one (n, x).
CensusResult sharpness_census(std::int64_t n, std::int64_t x, const CensusOptions& options = {});

/// Census for every x in [2, n], enumerating the class once.
std::vector<CensusResult> sharpness_census_all(std::int64_t n, const CensusOptions& options = {});

/// "n,x,bound,achieved_max,num_extremal,total_enumerated"
std::string census_csv_header();
std::string census_csv_row(const CensusResult& r);

/// The two N = 48 sets exhibiting non-unique extremal sets at x = 13.
IntSet remark_set_a();
IntSet remark_set_b();

/// Stability, min/max/gcd, cardinality 25, prefix count 4 at 13 for both
/// fixtures, and that they differ.
Report verify_remark_sets();

}  // namespace lstab
