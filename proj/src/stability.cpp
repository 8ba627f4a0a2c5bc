#include "lstab/stability.hpp"

#include <algorithm>
#include <string>

namespace lstab {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::string params_str(std::int64_t n, std::int64_t x, std::int64_t k, std::int64_t h) {
  return "(n=" + std::to_string(n) + ", x=" + std::to_string(x) + ", k=" + std::to_string(k) +
         ", h=" + std::to_string(h) + ")";
}

}  // namespace

StabilityReport is_left_stable(const IntSet& a) {
  if (a.empty()) throw Error("empty set");
  if (a.min() != 0) throw Error("not anchored at 0");
  const std::int64_t n = a.max();
  StabilityReport report;
  for (const auto p : a.elements()) {
    if (p == 0) continue;
    if (2 * p > n) break;
    // Sums p + q <= n for q in A, minus the elements of A.
    const IntSet missing = a.window(0, n - p).translate(p);
    std::optional<std::int64_t> first;
    missing.for_each([&](std::int64_t s) {
      if (!first && !a.contains(s)) first = s;
    });
    if (first) {
      report.stable = false;
      report.witness = StabilityWitness{p, *first - p, *first};
      return report;
    }
  }
  return report;
}

std::int64_t h_disc_k(std::int64_t n, std::int64_t x) {
  if (x <= 0) throw Error("x out of range");
  return n / x + 1;
}

HDiscParams h_disc(std::int64_t n, std::int64_t x) {
  if (n < 2) throw Error("n must be at least 2");
  if (x < 2 || x > n) throw Error("x out of range");
  const std::int64_t k = h_disc_k(n, x);
  const std::int64_t upper_half = n - (n + 1) / 2;
  const std::int64_t num = 2 * k * (x - 1) - 2 * upper_half;
  return HDiscParams{n, x, k, 1 + floor_div(num, k * (k + 1))};
}

bool h_disc_monotone_scan(std::int64_t n) {
  if (n < 3) throw Error("n must be at least 3");
  std::int64_t prev = h_disc(n, 2).value;
  for (std::int64_t x = 3; x <= n; ++x) {
    const std::int64_t cur = h_disc(n, x).value;
    if (prev > cur) return false;
    prev = cur;
  }
  return true;
}

Rational lemma_disc_bound(const IntSet& a, std::int64_t x, std::int64_t k) {
  if (a.empty()) throw Error("empty set");
  if (a.min() != 0) throw Error("lemma hypothesis violated: min(A) != 0");
  if (!is_left_stable(a).stable) throw Error("lemma hypothesis violated: A is not left-stable");
  if (!a.contains(x)) throw Error("lemma hypothesis violated: x not in A");
  if (k < 2) throw Error("lemma hypothesis violated: k < 2");
  const auto st = stats(a);
  const std::int64_t n = st.diam;
  const std::int64_t d = st.gcd_star;

  // A ∩ [(k-1)x, N] must differ from dZ ∩ [(k-1)x, N].
  const std::int64_t lo = (k - 1) * x;
  bool full = true;
  for (std::int64_t t = lo; t <= n && full; ++t) {
    if (t % d == 0 && !a.contains(t)) full = false;
  }
  if (full) throw Error("lemma hypothesis violated: A ∩ [(k-1)x, N] is all of dZ ∩ [(k-1)x, N]");

  Rational tail;
  if (k * x <= n) {
    tail = Rational(static_cast<std::int64_t>(a.prefix_count(k * x)));
  } else {
    tail = Rational(static_cast<std::int64_t>(st.cardinality)) + Rational(k * x - n, d);
  }
  return Rational(2 * (k - 1), k) + Rational(2, k * (k + 1)) * tail;
}

ExtremalDiscLayout extremal_disc_layout(std::int64_t n, std::int64_t x) {
  const auto hp = h_disc(n, x);
  ExtremalDiscLayout out;
  out.n = n;
  out.x = x;
  out.k = hp.k;
  out.h = hp.value;
  const std::int64_t k = hp.k;
  const std::int64_t h = hp.value;
  out.tail_start = k * (k - 1) / 2 * (h - 1) + k + n - (n + 1) / 2;
  out.sandwich_lower = (k - 1) * x + 1 <= out.tail_start;
  out.sandwich_upper = out.tail_start <= k * (x - h + 1);

  IntSet acc = IntSet::range(std::max<std::int64_t>(out.tail_start, 0), n);
  for (std::int64_t i = 0; i < k; ++i) {
    const std::int64_t lo = i * (x - h + 1);
    const std::int64_t hi = std::min(i * x, n);
    out.blocks.emplace_back(lo, i * x);
    acc = acc.set_union(IntSet::range(lo, hi));
  }
  out.set = acc;
  out.stable = out.set.contains(0) && is_left_stable(out.set).stable;
  out.cardinality_ok = out.set.size() == static_cast<std::size_t>((n + 1) / 2 + 1);
  out.prefix_ok = out.set.prefix_count(x) == static_cast<std::size_t>(h + 1);
  return out;
}

IntSet construct_extremal_disc(std::int64_t n, std::int64_t x) {
  const auto layout = extremal_disc_layout(n, x);
  const auto where = params_str(n, x, layout.k, layout.h);
  if (!layout.sandwich()) {
    throw InconsistencyError("extremal construction: sandwich inequality fails " + where +
                             ", tail start " + std::to_string(layout.tail_start) + " outside [" +
                             std::to_string((layout.k - 1) * x + 1) + ", " +
                             std::to_string(layout.k * (x - layout.h + 1)) + "]");
  }
  if (!layout.stable) throw InconsistencyError("extremal construction: result not left-stable " + where);
  if (!layout.cardinality_ok) {
    throw InconsistencyError("extremal construction: cardinality " + std::to_string(layout.set.size()) +
                             " != floor((n+1)/2)+1 " + where);
  }
  if (!layout.prefix_ok) throw InconsistencyError("extremal construction: prefix count != h+1 " + where);
  return layout.set;
}

}  // namespace lstab
