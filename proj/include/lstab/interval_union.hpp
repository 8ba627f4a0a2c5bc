#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lstab/rational.hpp"

namespace lstab {

/// Closed interval [lo, hi] with lo <= hi; lo == hi is a single point.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of closed intervals with exact rational endpoints, kept
/// sorted with strictly separated components (touching intervals merge).
/// For this class the inner Lebesgue measure is the sum of lengths.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  /// Sorts and merges; throws if some lo > hi.
  explicit IntervalUnion(std::vector<Interval> intervals);
  static IntervalUnion from_pairs(const std::vector<std::pair<Rational, Rational>>& pairs);
  static IntervalUnion point(const Rational& p) { return IntervalUnion({Interval{p, p}}); }
  static IntervalUnion segment(const Rational& lo, const Rational& hi) { return IntervalUnion({Interval{lo, hi}}); }

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  Rational inf() const;
  Rational sup() const;
  bool contains(const Rational& x) const;

  IntervalUnion translate(const Rational& t) const;
  /// {c - x : x in *this}.
  IntervalUnion reflect(const Rational& c) const;
  IntervalUnion set_union(const IntervalUnion& other) const;

  /// Closures of the pieces of *this not covered by `other`. A piece open at
  /// an end still reports that endpoint, so the result can overstate the
  /// difference by finitely many points.
  IntervalUnion difference_closure(const IntervalUnion& other) const;

  /// Canonical text "{0} ∪ [11/30,3/5] ∪ [11/15,1]".
  std::string to_string() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> intervals_;
};

Rational measure(const IntervalUnion& u);
Rational diam(const IntervalUnion& u);

/// Pairwise interval sums, normalized.
IntervalUnion minkowski_sum(const IntervalUnion& u, const IntervalUnion& v);

/// u ∩ [lo, hi]. Throws when lo > hi.
IntervalUnion intersect_window(const IntervalUnion& u, const Rational& lo, const Rational& hi);

/// Measure of u ∩ (-inf, x].
Rational prefix_measure(const IntervalUnion& u, const Rational& x);

/// {"intervals": [["p/q","r/s"], ...]}
std::string to_json(const IntervalUnion& u);
IntervalUnion interval_union_from_json(const std::string& text);

}  // namespace lstab
