#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lstab/interval_union.hpp"
#include "lstab/rational.hpp"
#include "lstab/report.hpp"

namespace lstab {

struct ContStabilityReport {
  bool stable = true;
  /// Closure of a piece of (u+u) ∩ [0, diam u] missing from u.
  std::optional<Interval> witness;
};

/// (u + u) ∩ [0, diam u] == u, exactly. Throws unless inf u == 0.
ContStabilityReport is_left_stable_cont(const IntervalUnion& u);

/// k >= 2 with x/d in (1/k, 1/(k-1)], i.e. floor(d/x) + 1.
std::int64_t h_cont_k(const Rational& x, const Rational& d);

/// One affine piece of the bound: (2x - d/k) / (k+1).
Rational h_cont_piece(const Rational& x, const Rational& d, std::int64_t k);

/// d * h(x/d) for 0 <= x <= d (h(0) = 0), using the piece selected by h_cont_k.
Rational h_cont(const Rational& x, const Rational& d);

/// Right-hand side of the continuous prefix lemma for a left-stable u:
///   2/(k+1) * (x - (d - λ(u))/k)     if kx > d
///   2/(k(k+1)) * λ(u ∩ [0, kx])      if kx <= d
/// Throws naming the hypothesis that fails (stability, x ∈ u, k >= 2,
/// λ(u ∩ [(k-1)x, d]) < d - (k-1)x).
Rational lemma_cont_bound(const IntervalUnion& u, const Rational& x, std::int64_t k);

struct ExtremalContLayout {
  Rational x;
  Rational d;
  /// (k-1)x < d <= kx.
  std::int64_t k = 0;
  /// Blocks I_0..I_{k-1} followed by the tail block, before merging.
  std::vector<Interval> blocks;
  IntervalUnion set;

  bool disjoint = false;
  bool half_measure = false;
  bool stable = false;
  bool prefix_ok = false;

  bool all_ok() const { return disjoint && half_measure && stable && prefix_ok; }
};

/// k = ceil(d/x), the integer with (k-1)x < d <= kx.
std::int64_t extremal_cont_k(const Rational& x, const Rational& d);

ExtremalContLayout extremal_cont_layout(const Rational& x, const Rational& d);

/// ∪_{i<k} [i((k-1)x/(k+1) + d/(k(k+1))), ix]  ∪  [k(k-1)x/(k+1) + d/(k+1), d].
/// Throws InconsistencyError unless the blocks are disjoint, the measure is
/// d/2, the set is left-stable and λ(A ∩ [0,x]) = h_cont(x, d).
IntervalUnion construct_extremal_cont(const Rational& x, const Rational& d);

struct RuzsaReport {
  Rational ratio;  // λ(A)/λ(B)
  std::int64_t K = 0;
  Rational sum_measure;  // λ(A+B)
  Rational branch1_rhs;  // λ(A) + diam(B)
  Rational branch2_rhs;  // (K+1)(λ(A)/K + λ(B)/2)
  bool branch1_holds = false;
  bool branch2_holds = false;
  bool superadditive = false;  // λ(A+B) >= λ(A) + λ(B)

  bool holds() const { return branch1_holds || branch2_holds; }
  Report to_report() const;
};

/// K(K-1)/2 <= ratio < K(K+1)/2.
std::int64_t ruzsa_k(const Rational& ratio);

RuzsaReport ruzsa_check(const IntervalUnion& a, const IntervalUnion& b);

struct EnvelopeCandidate {
  Rational b;
  bool pass = true;
  /// First failing point, in the coordinates of A - inf A.
  std::optional<Rational> failing_x;
  /// "head", "middle" or "tail".
  std::string failing_piece;
  Rational g_at_failure;
  Rational bound_at_failure;
};

struct EnvelopeReport {
  Rational measure;
  Rational diam;
  Rational delta;  // 2λ(A) - diam(A)
  Rational sum_measure;
  std::vector<EnvelopeCandidate> candidates;

  std::vector<Rational> passing() const;
  Report to_report() const;
};

/// Checks the three-piece envelope of g(x) = λ((A - inf A) ∩ [0, x]) for one
/// split point b, with Δ = 2λ(A) - diam(A):
///   g(x) <= b h(x/b) on [0, b]
///   g(x) = x - b/2 on [b, b+Δ]
///   g(x) >= λ(A) - c h((d-x)/c) on [b+Δ, d],   c = d - Δ - b.
/// Both sides are piecewise affine, so the comparison runs at the union of
/// their breakpoints. The bound's breakpoints accumulate only where g is
/// constant (or at a point that already fails), which keeps the list finite.
EnvelopeCandidate envelope_check_at(const IntervalUnion& a, const Rational& b);

/// Requires λ(A+A) = diam(A) + λ(A) < 3λ(A). Candidate split points are the
/// b with [b, b+Δ] inside one component of A and g(b) = b/2; every candidate
/// is checked with envelope_check_at. Throws InconsistencyError if there is
/// no candidate at all.
EnvelopeReport critical_envelope_check(const IntervalUnion& a);

}  // namespace lstab
