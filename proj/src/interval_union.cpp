#include "lstab/interval_union.hpp"

#include <algorithm>
#include <json.hpp>

#include "lstab/intset.hpp"

namespace lstab {

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.hi < iv.lo) throw Error("interval [" + iv.lo.to_string() + "," + iv.hi.to_string() + "] has lo > hi");
  }
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      if (intervals_.back().hi < iv.hi) intervals_.back().hi = iv.hi;
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

IntervalUnion IntervalUnion::from_pairs(const std::vector<std::pair<Rational, Rational>>& pairs) {
  std::vector<Interval> ivs;
  ivs.reserve(pairs.size());
  for (const auto& [lo, hi] : pairs) ivs.push_back(Interval{lo, hi});
  return IntervalUnion(std::move(ivs));
}

Rational IntervalUnion::inf() const {
  if (empty()) throw Error("empty set");
  return intervals_.front().lo;
}

Rational IntervalUnion::sup() const {
  if (empty()) throw Error("empty set");
  return intervals_.back().hi;
}

bool IntervalUnion::contains(const Rational& x) const {
  // First component with hi >= x.
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Interval& iv, const Rational& v) { return iv.hi < v; });
  return it != intervals_.end() && it->lo <= x;
}

IntervalUnion IntervalUnion::translate(const Rational& t) const {
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back(Interval{iv.lo + t, iv.hi + t});
  return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::reflect(const Rational& c) const {
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back(Interval{c - iv.hi, c - iv.lo});
  return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::set_union(const IntervalUnion& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return IntervalUnion(std::move(all));
}

IntervalUnion IntervalUnion::difference_closure(const IntervalUnion& other) const {
  std::vector<Interval> out;
  for (const auto& iv : intervals_) {
    // cursor: left end of the part of iv not yet examined.
    Rational cursor = iv.lo;
    bool cursor_covered = false;
    bool done = false;
    for (const auto& cover : other.intervals()) {
      if (cover.hi < cursor) continue;
      if (iv.hi < cover.lo) break;
      if (cursor < cover.lo) out.push_back(Interval{cursor, cover.lo});
      if (iv.hi <= cover.hi) {
        done = true;
        break;
      }
      cursor = cover.hi;
      cursor_covered = true;
    }
    if (done) continue;
    if (cursor < iv.hi || !cursor_covered) out.push_back(Interval{cursor, iv.hi});
  }
  return IntervalUnion(std::move(out));
}

std::string IntervalUnion::to_string() const {
  if (empty()) return "{}";
  std::string out;
  for (const auto& iv : intervals_) {
    if (!out.empty()) out += " ∪ ";
    if (iv.lo == iv.hi) {
      out += "{" + iv.lo.to_string() + "}";
    } else {
      out += "[" + iv.lo.to_string() + "," + iv.hi.to_string() + "]";
    }
  }
  return out;
}

Rational measure(const IntervalUnion& u) {
  if (u.empty()) throw Error("empty set");
  Rational total;
  for (const auto& iv : u.intervals()) total += iv.length();
  return total;
}

Rational diam(const IntervalUnion& u) {
  if (u.empty()) throw Error("empty set");
  return u.sup() - u.inf();
}

IntervalUnion minkowski_sum(const IntervalUnion& u, const IntervalUnion& v) {
  if (u.empty() || v.empty()) throw Error("empty set");
  std::vector<Interval> out;
  out.reserve(u.intervals().size() * v.intervals().size());
  for (const auto& a : u.intervals()) {
    for (const auto& b : v.intervals()) out.push_back(Interval{a.lo + b.lo, a.hi + b.hi});
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion intersect_window(const IntervalUnion& u, const Rational& lo, const Rational& hi) {
  if (hi < lo) throw Error("window has lo > hi");
  std::vector<Interval> out;
  for (const auto& iv : u.intervals()) {
    if (iv.hi < lo || hi < iv.lo) continue;
    out.push_back(Interval{max(iv.lo, lo), min(iv.hi, hi)});
  }
  return IntervalUnion(std::move(out));
}

Rational prefix_measure(const IntervalUnion& u, const Rational& x) {
  Rational total;
  for (const auto& iv : u.intervals()) {
    if (x <= iv.lo) break;
    total += min(iv.hi, x) - iv.lo;
  }
  return total;
}

std::string to_json(const IntervalUnion& u) {
  nlohmann::json j;
  j["intervals"] = nlohmann::json::array();
  for (const auto& iv : u.intervals()) j["intervals"].push_back({iv.lo.to_string(), iv.hi.to_string()});
  return j.dump();
}

IntervalUnion interval_union_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("interval JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array()) {
    throw Error("interval JSON: expected {\"intervals\": [[lo, hi], ...]}");
  }
  std::vector<Interval> ivs;
  for (const auto& pair : j["intervals"]) {
    if (!pair.is_array() || pair.size() != 2) throw Error("interval JSON: each interval needs two endpoints");
    auto endpoint = [](const nlohmann::json& e) {
      if (e.is_string()) return Rational::parse(e.get<std::string>());
      if (e.is_number_integer()) return Rational(e.get<std::int64_t>());
      throw Error("interval JSON: endpoints must be \"p/q\" strings or integers");
    };
    ivs.push_back(Interval{endpoint(pair[0]), endpoint(pair[1])});
  }
  return IntervalUnion(std::move(ivs));
}

}  // namespace lstab
