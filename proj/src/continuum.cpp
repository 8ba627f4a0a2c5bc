#include "lstab/continuum.hpp"

#include <algorithm>

#include "lstab/intset.hpp"

namespace lstab {

ContStabilityReport is_left_stable_cont(const IntervalUnion& u) {
  if (u.empty()) throw Error("empty set");
  if (u.inf() != Rational(0)) throw Error("not anchored at 0");
  const IntervalUnion clipped = intersect_window(minkowski_sum(u, u), Rational(0), diam(u));
  ContStabilityReport r;
  if (clipped == u) return r;
  r.stable = false;
  const IntervalUnion extra = clipped.difference_closure(u);
  if (!extra.empty()) r.witness = extra.intervals().front();
  return r;
}

std::int64_t h_cont_k(const Rational& x, const Rational& d) { return (d / x).floor() + 1; }

Rational h_cont_piece(const Rational& x, const Rational& d, std::int64_t k) {
  return (Rational(2) * x - d / Rational(k)) / Rational(k + 1);
}

Rational h_cont(const Rational& x, const Rational& d) {
  if (x.sign() < 0) throw Error("h_cont: x must be nonnegative");
  if (d < x) throw Error("h_cont: x exceeds d");
  if (x.sign() == 0) return Rational(0);
  return h_cont_piece(x, d, h_cont_k(x, d));
}

Rational lemma_cont_bound(const IntervalUnion& u, const Rational& x, std::int64_t k) {
  if (u.empty()) throw Error("empty set");
  if (u.inf() != Rational(0)) throw Error("lemma hypothesis violated: inf(A) != 0");
  if (!is_left_stable_cont(u).stable) throw Error("lemma hypothesis violated: A is not left-stable");
  if (!u.contains(x)) throw Error("lemma hypothesis violated: x not in A");
  if (k < 2) throw Error("lemma hypothesis violated: k < 2");
  const Rational d = diam(u);
  const Rational lam = measure(u);
  const Rational lo = Rational(k - 1) * x;
  if (d < lo) throw Error("lemma hypothesis violated: (k-1)x > d");
  if (!(prefix_measure(u, d) - prefix_measure(u, lo) < d - lo)) {
    throw Error("lemma hypothesis violated: A has full measure on [(k-1)x, d]");
  }
  const Rational kx = Rational(k) * x;
  if (d < kx) return Rational(2, k + 1) * (x - (d - lam) / Rational(k));
  return Rational(2, k * (k + 1)) * prefix_measure(u, kx);
}

std::int64_t extremal_cont_k(const Rational& x, const Rational& d) { return (d / x).ceil(); }

ExtremalContLayout extremal_cont_layout(const Rational& x, const Rational& d) {
  if (x.sign() <= 0) throw Error("extremal: x must be positive");
  if (d < x) throw Error("extremal: x exceeds d");
  ExtremalContLayout out;
  out.x = x;
  out.d = d;
  const std::int64_t k = extremal_cont_k(x, d);
  out.k = k;
  const Rational kr(k);
  const Rational step = Rational(k - 1, k + 1) * x + d / Rational(k * (k + 1));
  for (std::int64_t i = 0; i < k; ++i) out.blocks.push_back(Interval{Rational(i) * step, Rational(i) * x});
  out.blocks.push_back(Interval{Rational(k * (k - 1), k + 1) * x + d / Rational(k + 1), d});

  out.disjoint = true;
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    if (out.blocks[i].hi < out.blocks[i].lo) out.disjoint = false;
    if (i + 1 < out.blocks.size() && !(out.blocks[i].hi < out.blocks[i + 1].lo)) out.disjoint = false;
  }
  out.set = IntervalUnion(out.blocks);
  out.half_measure = measure(out.set) == d / Rational(2);
  out.stable = is_left_stable_cont(out.set).stable;
  out.prefix_ok = prefix_measure(out.set, x) == h_cont(x, d);
  return out;
}

IntervalUnion construct_extremal_cont(const Rational& x, const Rational& d) {
  const auto layout = extremal_cont_layout(x, d);
  const std::string where = " (x=" + x.to_string() + ", d=" + d.to_string() + ", k=" + std::to_string(layout.k) + ")";
  if (!layout.disjoint) throw InconsistencyError("extremal construction: blocks overlap" + where);
  if (!layout.half_measure) throw InconsistencyError("extremal construction: measure != d/2" + where);
  if (!layout.stable) throw InconsistencyError("extremal construction: not left-stable" + where);
  if (!layout.prefix_ok) throw InconsistencyError("extremal construction: prefix measure != h" + where);
  return layout.set;
}

std::int64_t ruzsa_k(const Rational& ratio) {
  if (ratio.sign() <= 0) throw Error("ruzsa: ratio must be positive");
  std::int64_t k = 1;
  while (!(ratio < Rational(k * (k + 1), 2))) ++k;
  return k;
}

RuzsaReport ruzsa_check(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.empty() || b.empty()) throw Error("empty set");
  const Rational la = measure(a);
  const Rational lb = measure(b);
  if (la.sign() == 0 || lb.sign() == 0) throw Error("ruzsa: zero-measure input");
  RuzsaReport r;
  r.ratio = la / lb;
  r.K = ruzsa_k(r.ratio);
  r.sum_measure = measure(minkowski_sum(a, b));
  r.branch1_rhs = la + diam(b);
  r.branch2_rhs = Rational(r.K + 1) * (la / Rational(r.K) + lb / Rational(2));
  r.branch1_holds = r.sum_measure >= r.branch1_rhs;
  r.branch2_holds = r.sum_measure >= r.branch2_rhs;
  r.superadditive = r.sum_measure >= la + lb;
  return r;
}

Report RuzsaReport::to_report() const {
  Report rep;
  rep.add("RATIO", ratio.to_string()).add("K", K).add("SUM_MEASURE", sum_measure.to_string());
  rep.add("BRANCH1_RHS", branch1_rhs.to_string()).add_flag("BRANCH1", branch1_holds);
  rep.add("BRANCH2_RHS", branch2_rhs.to_string()).add_flag("BRANCH2", branch2_holds);
  rep.add_flag("SUPERADDITIVE", superadditive);
  rep.result = holds() && superadditive ? Verdict::kPass : Verdict::kFail;
  return rep;
}

namespace {

struct PrefixFailure {
  Rational y;
  Rational g;
  Rational bound;
};

// Checks λ(s ∩ [0, y]) <= c h(y/c) for y in [0, c], where s ⊆ [0, c].
std::optional<PrefixFailure> check_prefix_envelope(const IntervalUnion& s, const Rational& c) {
  if (c.sign() <= 0 || s.empty()) return std::nullopt;
  // g vanishes up to the first component of positive length.
  const Interval* first = nullptr;
  for (const auto& iv : s.intervals()) {
    if (iv.lo < iv.hi) {
      first = &iv;
      break;
    }
  }
  if (first == nullptr) return std::nullopt;
  const Rational start = first->lo.sign() > 0 ? first->lo : first->hi;
  const std::int64_t kmax = (c / start).ceil() + 1;

  std::vector<Rational> points;
  for (const auto& iv : s.intervals()) {
    points.push_back(iv.lo);
    points.push_back(iv.hi);
  }
  for (std::int64_t k = 1; k <= kmax; ++k) points.push_back(c / Rational(k));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  for (const auto& y : points) {
    if (y.sign() <= 0 || c < y) continue;
    const Rational g = prefix_measure(s, y);
    const Rational bound = h_cont(y, c);
    if (bound < g) return PrefixFailure{y, g, bound};
  }
  return std::nullopt;
}

}  // namespace

EnvelopeCandidate envelope_check_at(const IntervalUnion& a, const Rational& b) {
  if (a.empty()) throw Error("empty set");
  const IntervalUnion s = a.translate(-a.inf());
  const Rational d = diam(s);
  const Rational lam = measure(s);
  const Rational delta = Rational(2) * lam - d;
  if (b.sign() < 0 || d < b + delta) throw Error("envelope: split point outside [0, d - Δ]");
  EnvelopeCandidate out;
  out.b = b;

  // Head: A1 = s ∩ [0, b].
  if (auto fail = check_prefix_envelope(intersect_window(s, Rational(0), b), b)) {
    out.pass = false;
    out.failing_x = fail->y;
    out.failing_piece = "head";
    out.g_at_failure = fail->g;
    out.bound_at_failure = fail->bound;
    return out;
  }
  // Middle: [b, b+Δ] ⊆ s and g(b) = b/2.
  const Rational gb = prefix_measure(s, b);
  const Rational top = b + delta;
  if (gb != b / Rational(2) || prefix_measure(s, top) != top - b / Rational(2)) {
    const bool left = gb != b / Rational(2);
    out.pass = false;
    out.failing_x = left ? b : top;
    out.failing_piece = "middle";
    out.g_at_failure = left ? gb : prefix_measure(s, top);
    out.bound_at_failure = left ? b / Rational(2) : top - b / Rational(2);
    return out;
  }
  // Tail, reflected: d - (s ∩ [b+Δ, d]) against the same prefix envelope.
  const Rational c = d - delta - b;
  if (c.sign() > 0) {
    const IntervalUnion tail = intersect_window(s, top, d).reflect(d);
    if (auto fail = check_prefix_envelope(tail, c)) {
      out.pass = false;
      out.failing_x = d - fail->y;
      out.failing_piece = "tail";
      out.g_at_failure = lam - fail->g;
      out.bound_at_failure = lam - fail->bound;
      return out;
    }
  }
  return out;
}

std::vector<Rational> EnvelopeReport::passing() const {
  std::vector<Rational> out;
  for (const auto& c : candidates) {
    if (c.pass) out.push_back(c.b);
  }
  return out;
}

Report EnvelopeReport::to_report() const {
  Report r;
  r.add("MEASURE", measure.to_string()).add("DIAM", diam.to_string()).add("DELTA", delta.to_string());
  r.add("SUM_MEASURE", sum_measure.to_string());
  r.add("CANDIDATES", static_cast<long long>(candidates.size()));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    const std::string p = "CANDIDATE_" + std::to_string(i) + "_";
    r.add(p + "B", c.b.to_string());
    r.add(p + "RESULT", std::string(c.pass ? "PASS" : "FAIL"));
    if (!c.pass) {
      r.add(p + "PIECE", c.failing_piece);
      r.add(p + "BREAKPOINT", c.failing_x->to_string());
      r.add(p + "G", c.g_at_failure.to_string());
      r.add(p + "BOUND", c.bound_at_failure.to_string());
    }
  }
  std::string pass_list;
  for (const auto& b : passing()) pass_list += (pass_list.empty() ? "" : ",") + b.to_string();
  r.add("PASSING_B", pass_list);
  r.result = passing().empty() ? Verdict::kFail : Verdict::kPass;
  return r;
}

EnvelopeReport critical_envelope_check(const IntervalUnion& a) {
  if (a.empty()) throw Error("empty set");
  const IntervalUnion s = a.translate(-a.inf());
  EnvelopeReport rep;
  rep.measure = measure(s);
  rep.diam = diam(s);
  rep.sum_measure = measure(minkowski_sum(s, s));
  if (rep.sum_measure != rep.diam + rep.measure || !(rep.sum_measure < Rational(3) * rep.measure)) {
    throw Error("not critical: λ(A+A) = " + rep.sum_measure.to_string() + ", diam + λ = " +
                (rep.diam + rep.measure).to_string() + ", 3λ = " + (Rational(3) * rep.measure).to_string());
  }
  rep.delta = Rational(2) * rep.measure - rep.diam;
  for (const auto& iv : s.intervals()) {
    if (iv.length() < rep.delta) continue;
    // On [p, q] ⊆ A, g(y) - y/2 grows with slope 1/2, so g(b) = b/2 has at
    // most one root: b = 2(p - g(p)).
    const Rational b = Rational(2) * (iv.lo - prefix_measure(s, iv.lo));
    if (b < iv.lo || iv.hi - rep.delta < b) continue;
    rep.candidates.push_back(envelope_check_at(s, b));
  }
  if (rep.candidates.empty()) {
    throw InconsistencyError("critical set has no interval [b, b+Δ] with g(b) = b/2: " + s.to_string());
  }
  return rep;
}

}  // namespace lstab
