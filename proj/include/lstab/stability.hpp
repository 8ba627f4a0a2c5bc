#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lstab/intset.hpp"
#include "lstab/rational.hpp"

namespace lstab {

/// a + b <= diam(A) with a, b in A but a + b missing from A.
struct StabilityWitness {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t sum = 0;
};

struct StabilityReport {
  bool stable = true;
  /// Lexicographically smallest violating pair; present iff !stable.
  std::optional<StabilityWitness> witness;
};

/// Closure test (A + A) ∩ [0, diam A] = A for a set anchored at 0.
StabilityReport is_left_stable(const IntSet& a);

/// The staircase bound for a set of diameter n, evaluated at x, where k is
/// the unique integer with x in (n/k, n/(k-1)].
struct HDiscParams {
  std::int64_t n = 0;
  std::int64_t x = 0;
  std::int64_t k = 0;
  std::int64_t value = 0;
};

/// k = floor(n/x) + 1, i.e. k*x > n >= (k-1)*x.
std::int64_t h_disc_k(std::int64_t n, std::int64_t x);

/// h(x) = 1 + floor((2k(x-1) - 2(n - floor((n+1)/2))) / (k(k+1))), exact.
/// Requires n >= 2 and 2 <= x <= n.
HDiscParams h_disc(std::int64_t n, std::int64_t x);

/// True iff h_disc(n, x-1) <= h_disc(n, x) for all x in [3, n].
bool h_disc_monotone_scan(std::int64_t n);

/// Right-hand side of the prefix lemma for a left-stable set:
///
///   2(k-1)/k + 2/(k(k+1)) * |A_{kx}|            if kx <= N
///   2(k-1)/k + 2/(k(k+1)) * (|A| + (kx-N)/d)    if kx >  N
///
/// with N = diam A and d = gcd*(A). Throws naming the failed hypothesis when
/// A is not left-stable, x is not in A, k < 2, or A ∩ [(k-1)x, N] equals
/// dZ ∩ [(k-1)x, N].
Rational lemma_disc_bound(const IntSet& a, std::int64_t x, std::int64_t k);

/// Raw pieces of the sharpness construction for (n, x), with every
/// postcondition evaluated but not enforced.
struct ExtremalDiscLayout {
  std::int64_t n = 0;
  std::int64_t x = 0;
  std::int64_t k = 0;
  std::int64_t h = 0;
  /// Start of the trailing block [tail_start, n].
  std::int64_t tail_start = 0;
  /// Blocks [i(x-h+1), ix] for i = 0..k-1.
  std::vector<std::pair<std::int64_t, std::int64_t>> blocks;
  IntSet set;

  bool sandwich_lower = false;  // (k-1)x + 1 <= tail_start
  bool sandwich_upper = false;  // tail_start <= k(x-h+1)
  bool stable = false;
  bool cardinality_ok = false;  // |set| == floor((n+1)/2) + 1
  bool prefix_ok = false;       // |set ∩ [0,x]| == h + 1

  bool sandwich() const { return sandwich_lower && sandwich_upper; }
  bool all_ok() const { return sandwich() && stable && cardinality_ok && prefix_ok; }
};

ExtremalDiscLayout extremal_disc_layout(std::int64_t n, std::int64_t x);

/// The sharpness set
///   ∪_{i<k} [i(x-h+1), ix]  ∪  [k(k-1)/2 (h-1) + k + n - floor((n+1)/2), n].
/// Throws InconsistencyError carrying (n, x, k, h) if the sandwich
/// inequality or any of stability, cardinality or prefix count fails.
IntSet construct_extremal_disc(std::int64_t n, std::int64_t x);

}  // namespace lstab
