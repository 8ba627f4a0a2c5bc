#pragma once

#include <cstdint>
#include <string_view>

#include "lstab/intset.hpp"
#include "lstab/report.hpp"

namespace lstab {

enum class FreimanCategory {
  kCriticalNA,   // |A+A| = |A| + N_A < 3|A| - 3
  kEquality3k3,  // |A+A| = 3|A| - 3 <= |A| + N_A
  kAbove,
};

std::string_view to_string(FreimanCategory c);

struct FreimanClass {
  std::int64_t cardinality = 0;
  std::int64_t n_a = 0;
  std::int64_t sum_size = 0;  // |A+A|
  std::int64_t bound = 0;     // min(3|A|-3, |A|+N_A)
  FreimanCategory category = FreimanCategory::kAbove;
};

/// Needs |a| >= 2. Throws InconsistencyError if |A+A| < bound.
FreimanClass classify(const IntSet& a);

struct PairCheck {
  std::int64_t size_a = 0;
  std::int64_t size_b = 0;
  std::int64_t sum_size = 0;
  int delta = 0;
  bool hypothesis_met = false;
  /// Common difference used for all three progressions.
  std::int64_t step = 1;
  std::int64_t pa_size = 0;
  std::int64_t pb_size = 0;
  std::int64_t pab_size = 0;
  bool pa_ok = false;
  bool pb_ok = false;
  bool pab_ok = false;
  Verdict verdict = Verdict::kVacuous;

  Report to_report() const;
};

/// Checks the 3k-4 conclusions for A, B with |B| <= |A|. The progressions
/// share the step g = gcd((A - min A) ∪ (B - min B)): P_A and P_B are the
/// shortest step-g progressions covering A and B, P_{A+B} the longest step-g
/// run inside A+B. VACUOUS when |A+B| > |A| + 2|B| - 3 - delta.
PairCheck freiman_3k4_pair_check(const IntSet& a, const IntSet& b);

/// Freiman's three-part partition of a normalized critical set:
///   A' = a1 ⊔ [run_start, run_end] ⊔ (N_A - a2),   A' = (A - offset) / step.
struct CriticalDecomposition {
  IntSet a1;
  std::int64_t run_start = 0;
  std::int64_t run_end = 0;
  IntSet a2;
  std::int64_t step = 1;
  std::int64_t offset = 0;
  std::int64_t n_a = 0;

  std::int64_t run_length() const { return run_end - run_start + 1; }
  /// Glues the parts back together in the original coordinates.
  IntSet reassemble() const;
};

/// Exhaustive search over runs [i, j] ⊆ A' with 1 <= i. Keeps the split with
/// the longest run (smallest i on ties) whose parts are left-stable (or
/// empty) and whose run has at least 2|A| - N_A - 2 elements.
CriticalDecomposition decompose_critical(const IntSet& a);

struct GrynkiewiczParams {
  std::int64_t s = 0;
  std::int64_t s_prime_max = 0;
};

/// s with s(s-1)(|B|/2-1) + s - 1 < |A| <= s(s+1)(|B|/2-1) + s, and the
/// largest s' with |A| >= s'(s'-1)(|B|/2-1) + s'. Requires size_b >= 3.
GrynkiewiczParams grynkiewicz_params(std::int64_t size_a, std::int64_t size_b);

/// True iff |A| >= s'(s'-1)(|B|/2-1) + s'.
bool grynkiewicz_admissible(std::int64_t size_a, std::int64_t size_b, std::int64_t s_prime);

struct GrynkiewiczCheck {
  std::int64_t size_a = 0;
  std::int64_t size_b = 0;
  std::int64_t sum_size = 0;
  std::int64_t n_b = 0;
  std::int64_t s_prime = 0;
  bool antecedent = false;  // N_B > |A+B| - |A| + 1
  bool holds = true;        // |A+B| >= |A| + s'(|B|-2) + 1
  Verdict verdict = Verdict::kVacuous;

  Report to_report() const;
};

GrynkiewiczCheck grynkiewicz_check(const IntSet& a, const IntSet& b, std::int64_t s_prime);

}  // namespace lstab
