#include "lstab/freiman.hpp"

#include <algorithm>

#include <numeric>
#include <string>

#include "lstab/set_literal.hpp"
#include "lstab/stability.hpp"

namespace lstab {

namespace {

std::int64_t longest_step_run(const IntSet& s, std::int64_t step) {
  std::int64_t best = 0;
  s.for_each([&](std::int64_t v) {
    if (s.contains(v - step)) return;
    std::int64_t len = 0;
    while (s.contains(v + len * step)) ++len;
    best = std::max(best, len);
  });
  return best;
}

bool stable_or_empty(const IntSet& s) { return s.empty() || is_left_stable(s).stable; }

}  // namespace

std::string_view to_string(FreimanCategory c) {
  switch (c) {
    case FreimanCategory::kCriticalNA:
      return "CRITICAL_NA";
    case FreimanCategory::kEquality3k3:
      return "EQUALITY_3K3";
    case FreimanCategory::kAbove:
      return "ABOVE";
  }
  return "ABOVE";
}

FreimanClass classify(const IntSet& a) {
  if (a.size() < 2) throw Error("classify needs at least 2 elements");
  const IntSet norm = normalize(a);
  FreimanClass fc;
  fc.cardinality = static_cast<std::int64_t>(norm.size());
  fc.n_a = norm.max();
  fc.sum_size = static_cast<std::int64_t>(sumset(norm, norm).size());
  const std::int64_t three_k = 3 * fc.cardinality - 3;
  const std::int64_t k_plus_n = fc.cardinality + fc.n_a;
  fc.bound = std::min(three_k, k_plus_n);
  if (fc.sum_size < fc.bound) {
    throw InconsistencyError("|A+A| = " + std::to_string(fc.sum_size) + " below min(3|A|-3, |A|+N_A) = " +
                             std::to_string(fc.bound) + " for A = " + format_set_literal(a));
  }
  if (fc.sum_size == k_plus_n && k_plus_n < three_k) {
    fc.category = FreimanCategory::kCriticalNA;
  } else if (fc.sum_size == three_k && three_k <= k_plus_n) {
    fc.category = FreimanCategory::kEquality3k3;
  } else {
    fc.category = FreimanCategory::kAbove;
  }
  return fc;
}

PairCheck freiman_3k4_pair_check(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) throw Error("empty set");
  if (b.size() > a.size()) throw Error("pair check needs |B| <= |A|");
  PairCheck pc;
  pc.size_a = static_cast<std::int64_t>(a.size());
  pc.size_b = static_cast<std::int64_t>(b.size());
  const IntSet ab = sumset(a, b);
  pc.sum_size = static_cast<std::int64_t>(ab.size());
  const std::int64_t min_a = a.min();
  const std::int64_t min_b = b.min();
  pc.delta = a.translate(-min_a) == b.translate(-min_b) ? 1 : 0;
  pc.hypothesis_met = pc.sum_size <= pc.size_a + 2 * pc.size_b - 3 - pc.delta;
  if (!pc.hypothesis_met) {
    pc.verdict = Verdict::kVacuous;
    return pc;
  }
  std::int64_t g = 0;
  a.for_each([&](std::int64_t v) { g = std::gcd(g, v - min_a); });
  b.for_each([&](std::int64_t v) { g = std::gcd(g, v - min_b); });
  pc.step = g == 0 ? 1 : g;
  pc.pa_size = (a.max() - min_a) / pc.step + 1;
  pc.pb_size = (b.max() - min_b) / pc.step + 1;
  pc.pab_size = longest_step_run(ab, pc.step);
  pc.pa_ok = pc.pa_size <= pc.sum_size - pc.size_b + 1;
  pc.pb_ok = pc.pb_size <= pc.sum_size - pc.size_a + 1;
  pc.pab_ok = pc.pab_size >= pc.size_a + pc.size_b - 1;
  pc.verdict = pc.pa_ok && pc.pb_ok && pc.pab_ok ? Verdict::kPass : Verdict::kFail;
  return pc;
}

Report PairCheck::to_report() const {
  Report r;
  r.add("SIZE_A", size_a).add("SIZE_B", size_b).add("SUM_SIZE", sum_size).add("DELTA", delta);
  r.add_flag("HYPOTHESIS", hypothesis_met);
  if (hypothesis_met) {
    r.add("STEP", step).add("PA_SIZE", pa_size).add("PB_SIZE", pb_size).add("PAB_SIZE", pab_size);
    r.add_flag("PA_OK", pa_ok).add_flag("PB_OK", pb_ok).add_flag("PAB_OK", pab_ok);
  } else {
    r.add("NOTE", "hypothesis not met");
  }
  r.result = verdict;
  return r;
}

IntSet CriticalDecomposition::reassemble() const {
  IntSet norm = a1.set_union(IntSet::range(run_start, run_end));
  if (!a2.empty()) norm = norm.set_union(a2.reflect(n_a));
  std::vector<std::int64_t> out;
  norm.for_each([&](std::int64_t v) { out.push_back(offset + v * step); });
  return IntSet::from_elements(out);
}

CriticalDecomposition decompose_critical(const IntSet& a) {
  const auto fc = classify(a);
  if (fc.category != FreimanCategory::kCriticalNA) {
    throw Error("not critical: category " + std::string(to_string(fc.category)));
  }
  const auto st = stats(a);
  const IntSet norm = normalize(a);
  const std::int64_t n = st.n_a;
  const std::int64_t min_run = 2 * fc.cardinality - n - 2;

  bool found = false;
  CriticalDecomposition best;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (!norm.contains(i)) continue;
    const IntSet a1 = norm.window(0, i - 1);
    if (!stable_or_empty(a1)) continue;
    for (std::int64_t j = i; j <= n && norm.contains(j); ++j) {
      if (j - i + 1 < min_run) continue;
      if (found && j - i <= best.run_end - best.run_start) continue;
      const IntSet a2 = norm.window(j + 1, n).reflect(n);
      if (!stable_or_empty(a2)) continue;
      found = true;
      best = CriticalDecomposition{a1, i, j, a2, st.gcd_star, st.min, n};
    }
  }
  if (!found) throw InconsistencyError("decomposition not found for " + format_set_literal(a));
  return best;
}

namespace {

// 2 * (s(s-1)(b/2 - 1) + s), kept integral.
std::int64_t twice_threshold(std::int64_t s, std::int64_t size_b) { return s * (s - 1) * (size_b - 2) + 2 * s; }

}  // namespace

bool grynkiewicz_admissible(std::int64_t size_a, std::int64_t size_b, std::int64_t s_prime) {
  return s_prime >= 1 && 2 * size_a >= twice_threshold(s_prime, size_b);
}

GrynkiewiczParams grynkiewicz_params(std::int64_t size_a, std::int64_t size_b) {
  if (size_b < 3) throw Error("grynkiewicz needs |B| >= 3");
  if (size_a < 1) throw Error("grynkiewicz needs |A| >= 1");
  GrynkiewiczParams p;
  // Lower end of the s-window: s(s-1)(b/2-1) + s - 1, doubled.
  auto lower2 = [&](std::int64_t s) { return s * (s - 1) * (size_b - 2) + 2 * (s - 1); };
  auto upper2 = [&](std::int64_t s) { return s * (s + 1) * (size_b - 2) + 2 * s; };
  std::int64_t s = 1;
  while (2 * size_a > upper2(s)) ++s;
  if (!(lower2(s) < 2 * size_a)) {
    throw InconsistencyError("grynkiewicz: no s brackets |A| = " + std::to_string(size_a));
  }
  p.s = s;
  std::int64_t sp = 1;
  while (grynkiewicz_admissible(size_a, size_b, sp + 1)) ++sp;
  p.s_prime_max = sp;
  return p;
}

GrynkiewiczCheck grynkiewicz_check(const IntSet& a, const IntSet& b, std::int64_t s_prime) {
  if (a.empty() || b.empty()) throw Error("empty set");
  const auto size_b = static_cast<std::int64_t>(b.size());
  const auto size_a = static_cast<std::int64_t>(a.size());
  if (size_b < 3) throw Error("grynkiewicz needs |B| >= 3");
  if (s_prime < 1) throw Error("s' must be positive");
  if (!grynkiewicz_admissible(size_a, size_b, s_prime)) {
    throw Error("|A| < s'(s'-1)(|B|/2-1)+s' for s' = " + std::to_string(s_prime));
  }
  GrynkiewiczCheck gc;
  gc.size_a = size_a;
  gc.size_b = size_b;
  gc.s_prime = s_prime;
  gc.sum_size = static_cast<std::int64_t>(sumset(a, b).size());
  gc.n_b = stats(b).n_a;
  gc.antecedent = gc.n_b > gc.sum_size - size_a + 1;
  if (!gc.antecedent) {
    gc.verdict = Verdict::kVacuous;
    return gc;
  }
  gc.holds = gc.sum_size >= size_a + s_prime * (size_b - 2) + 1;
  gc.verdict = gc.holds ? Verdict::kPass : Verdict::kFail;
  return gc;
}

Report GrynkiewiczCheck::to_report() const {
  Report r;
  r.add("SIZE_A", size_a).add("SIZE_B", size_b).add("SUM_SIZE", sum_size).add("N_B", n_b);
  r.add("S_PRIME", s_prime).add_flag("ANTECEDENT", antecedent);
  if (antecedent) {
    r.add("REQUIRED", size_a + s_prime * (size_b - 2) + 1);
  } else {
    r.add("NOTE", "antecedent false");
  }
  r.result = verdict;
  return r;
}

}  // namespace lstab
