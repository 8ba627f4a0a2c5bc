// Acceptance runner. Prints one line per criterion:
//   criterion <id> <PASS|FAIL> <summary> (<seconds>s)
// Details of failures go to stderr. Usage: acceptance [id ...]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "lstab/census.hpp"
#include "lstab/continuum.hpp"
#include "lstab/freiman.hpp"
#include "lstab/set_literal.hpp"
#include "lstab/stability.hpp"

using namespace lstab;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
};

std::vector<IntSet> all_subsets(std::int64_t hi) {
  std::vector<IntSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (hi + 1)); ++mask) {
    out.push_back(IntSet::from_words({mask}));
  }
  return out;
}

Outcome reference_fixtures() {
  Outcome o;
  std::vector<std::string> bad;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  need(h_disc(48, 13).value == 3, "h(48,13)");
  need(h_disc(48, 12).value == 3, "h(48,12)");
  for (const auto& [name, s] : {std::pair{"A", remark_set_a()}, std::pair{"B", remark_set_b()}}) {
    need(is_left_stable(s).stable, std::string(name) + " stable");
    need(s.size() == 25, std::string(name) + " |A|=25");
    need(s.prefix_count(13) == 4, std::string(name) + " prefix 13");
  }
  need(verify_remark_sets().result == Verdict::kPass, "verify_remark_sets");
  try {
    need(construct_extremal_disc(48, 13) == parse_set_literal("0,11-13,22-26,33-48"), "construct(48,13)");
  } catch (const InconsistencyError& e) {
    need(false, e.what());
  }
  o.pass = bad.empty();
  o.summary = o.pass ? "h(48,13)=h(48,12)=3, both sets stable with |A|=25 and 4 points in [0,13], construction matches"
                     : "failed: " + bad.front();
  for (const auto& b : bad) std::cerr << "  criterion 1: " << b << "\n";
  return o;
}

Outcome sharpness_sweep() {
  std::int64_t total = 0, failed = 0, sandwich = 0, stable = 0, card = 0, prefix = 0;
  std::string first;
  for (std::int64_t n = 2; n <= 200; ++n) {
    for (std::int64_t x = 2; x <= n; ++x) {
      ++total;
      const auto l = extremal_disc_layout(n, x);
      if (l.all_ok()) continue;
      ++failed;
      sandwich += l.sandwich() ? 0 : 1;
      stable += l.stable ? 0 : 1;
      card += l.cardinality_ok ? 0 : 1;
      prefix += l.prefix_ok ? 0 : 1;
      if (first.empty()) {
        first = "(n,x)=(" + std::to_string(n) + "," + std::to_string(x) + ") k=" + std::to_string(l.k) +
                " h=" + std::to_string(l.h) + " set=" + format_set_literal(l.set);
      }
    }
  }
  Outcome o;
  o.pass = failed == 0;
  std::ostringstream s;
  s << total - failed << "/" << total << " (n,x) with n<=200 meet all four postconditions";
  if (failed) {
    s << "; violations: sandwich " << sandwich << ", stable " << stable << ", cardinality " << card << ", prefix "
      << prefix << "; first " << first;
  }
  o.summary = s.str();
  return o;
}

Outcome census_exhaustive() {
  CensusOptions opts;
  opts.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::int64_t cells = 0, exceeded = 0, not_sharp = 0, empty = 0;
  std::string first_exceed, first_not_sharp;
  for (std::int64_t n = 2; n <= 24; ++n) {
    for (const auto& r : sharpness_census_all(n, opts)) {
      ++cells;
      if (r.empty_class()) {
        ++empty;
        continue;
      }
      if (r.exceeds_bound()) {
        ++exceeded;
        std::cerr << "  criterion 3: n=" << r.n << " x=" << r.x << " achieved " << r.achieved_max << " > bound "
                  << r.bound << " e.g. " << format_set_literal(r.extremal_sets.front()) << "\n";
        if (first_exceed.empty()) {
          first_exceed = "(" + std::to_string(r.n) + "," + std::to_string(r.x) + ") by " +
                         format_set_literal(r.extremal_sets.front());
        }
      } else if (!r.sharp()) {
        ++not_sharp;
        if (first_not_sharp.empty()) first_not_sharp = "(" + std::to_string(r.n) + "," + std::to_string(r.x) + ")";
      }
    }
  }

  // Search versus a filter over all 2^(n-1) candidates.
  std::int64_t mismatched_n = 0;
  for (std::int64_t n = 2; n <= 18; ++n) {
    std::set<IntSet> naive;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      const IntSet s = IntSet::from_words({(mask << 1) | 1}).set_union(IntSet{n});
      if (is_left_stable(s).stable) naive.insert(s);
    }
    const auto fast = enumerate_left_stable(n, EnumerateConstraints{}, opts);
    if (std::set<IntSet>(fast.begin(), fast.end()) != naive || fast.size() != naive.size()) {
      ++mismatched_n;
      std::cerr << "  criterion 3: enumerator differs from naive filter at n=" << n << "\n";
    }
  }

  Outcome o;
  o.pass = exceeded == 0 && not_sharp == 0 && empty == 0 && mismatched_n == 0;
  std::ostringstream s;
  s << cells << " (n,x) cells for n<=24: " << exceeded << " exceed h+1, " << not_sharp << " below h+1, " << empty
    << " with empty class; enumerator vs naive filter n<=18: " << (mismatched_n ? "MISMATCH" : "identical");
  if (!first_exceed.empty()) s << "; first excess " << first_exceed;
  if (!first_not_sharp.empty()) s << "; first non-sharp " << first_not_sharp;
  o.summary = s.str();
  return o;
}

Outcome freiman_brute_force() {
  std::int64_t sets = 0, eq3_fail = 0;
  for (const auto& a : all_subsets(14)) {
    if (a.size() < 2) continue;
    ++sets;
    try {
      classify(a);
    } catch (const InconsistencyError& e) {
      if (++eq3_fail <= 5) std::cerr << "  criterion 4: " << e.what() << "\n";
    }
  }
  const auto subsets = all_subsets(10);
  std::int64_t pairs = 0, met = 0, fails = 0;
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      if (b.size() > a.size()) continue;
      ++pairs;
      const auto p = freiman_3k4_pair_check(a, b);
      if (!p.hypothesis_met) continue;
      ++met;
      if (p.verdict == Verdict::kFail && ++fails <= 5) {
        std::cerr << "  criterion 4: pair A=" << format_set_literal(a) << " B=" << format_set_literal(b) << "\n";
      }
    }
  }
  Outcome o;
  o.pass = eq3_fail == 0 && fails == 0;
  std::ostringstream s;
  s << "|A+A| bound: " << eq3_fail << " counterexamples in " << sets << " subsets of [0,14]; 3k-4: " << fails
    << " failures in " << met << " of " << pairs << " pairs from [0,10] meeting the hypothesis";
  o.summary = s.str();
  return o;
}

Outcome grynkiewicz_brute_force() {
  const auto subsets = all_subsets(12);
  std::vector<SetStats> st;
  st.reserve(subsets.size());
  for (const auto& s : subsets) st.push_back(stats(s));
  std::int64_t checks = 0, applicable = 0, fails = 0;
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    const auto& b = subsets[j];
    const auto size_b = static_cast<std::int64_t>(st[j].cardinality);
    if (size_b < 3) continue;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      const auto size_a = static_cast<std::int64_t>(st[i].cardinality);
      const auto smax = grynkiewicz_params(size_a, size_b).s_prime_max;
      for (std::int64_t sp = 1; sp <= smax; ++sp) {
        const auto g = grynkiewicz_check(subsets[i], b, sp);
        ++checks;
        if (!g.antecedent) continue;
        ++applicable;
        if (!g.holds && ++fails <= 5) {
          std::cerr << "  criterion 5: A=" << format_set_literal(subsets[i]) << " B=" << format_set_literal(b)
                    << " s'=" << sp << "\n";
        }
      }
    }
  }
  Outcome o;
  o.pass = fails == 0;
  std::ostringstream s;
  s << fails << " failures over " << checks << " (A,B,s') triples from [0,12] (" << applicable
    << " with the antecedent true)";
  o.summary = s.str();
  return o;
}

Outcome continuous_fixtures() {
  std::vector<std::string> bad;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  need(h_cont(1, 1) == Rational(1, 2), "h(1,1)");
  need(h_cont(Rational(1, 2), 1) == Rational(1, 6), "h(1/2,1)");
  need(h_cont(Rational(3, 5), 1) == Rational(7, 30), "h(3/5,1)");
  const IntervalUnion expected({Interval{0, 0}, Interval{Rational(11, 30), Rational(3, 5)},
                                Interval{Rational(11, 15), 1}});
  try {
    const auto a = construct_extremal_cont(Rational(3, 5), 1);
    need(a == expected, "construction = " + a.to_string());
    need(measure(a) == Rational(1, 2), "measure");
    need(is_left_stable_cont(a).stable, "stable");
    need(prefix_measure(a, Rational(3, 5)) == Rational(7, 30), "prefix");
  } catch (const InconsistencyError& e) {
    need(false, e.what());
  }
  Outcome o;
  o.pass = bad.empty();
  o.summary = o.pass ? "h(1)=1/2, h(1/2)=1/6, h(3/5)=7/30; construction {0} ∪ [11/30,3/5] ∪ [11/15,1], measure 1/2, "
                       "stable, prefix 7/30"
                     : "failed: " + bad.front();
  return o;
}

IntervalUnion random_union(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 6), den(1, 48);
  std::vector<Interval> ivs;
  const int m = count(rng);
  for (int i = 0; i < m; ++i) {
    const std::int64_t q = den(rng);
    std::uniform_int_distribution<std::int64_t> num(0, 4 * q);
    std::int64_t p1 = num(rng), p2 = num(rng);
    if (p1 == p2) ++p2;
    if (p2 < p1) std::swap(p1, p2);
    ivs.push_back(Interval{Rational(p1, q), Rational(p2, q)});
  }
  return IntervalUnion(std::move(ivs));
}

Outcome ruzsa_random() {
  std::mt19937_64 rng(20240229);
  std::int64_t branch_fail = 0, super_fail = 0;
  constexpr int kPairs = 10000;
  for (int i = 0; i < kPairs; ++i) {
    const auto a = random_union(rng);
    const auto b = random_union(rng);
    const auto r = ruzsa_check(a, b);
    if (!r.holds() && ++branch_fail <= 5) std::cerr << "  criterion 7: A=" << a.to_string() << " B=" << b.to_string() << "\n";
    if (!r.superadditive) ++super_fail;
  }
  Outcome o;
  o.pass = branch_fail == 0 && super_fail == 0;
  std::ostringstream s;
  s << kPairs << " seeded pairs: " << branch_fail << " violate both lower bounds, " << super_fail
    << " violate superadditivity";
  o.summary = s.str();
  return o;
}

Outcome monotone_and_continuity() {
  std::int64_t bad_n = 0, bad_k = 0;
  for (std::int64_t n = 3; n <= 500; ++n) bad_n += h_disc_monotone_scan(n) ? 0 : 1;
  for (const Rational d : {Rational(1), Rational(7, 3), Rational(48)}) {
    for (std::int64_t k = 1; k <= 100; ++k) {
      const Rational x = d / Rational(k);
      if (k >= 2 && h_cont_piece(x, d, k) != h_cont_piece(x, d, k + 1)) ++bad_k;
      if (h_cont(x, d) != h_cont_piece(x, d, k + 1)) ++bad_k;
    }
  }
  Outcome o;
  o.pass = bad_n == 0 && bad_k == 0;
  o.summary = std::to_string(bad_n) + " non-monotone n in [3,500]; " + std::to_string(bad_k) +
              " breakpoint mismatches at x=d/k, k<=100";
  return o;
}

IntervalUnion glued(const Rational& x1, const Rational& b, const Rational& delta, const Rational& x2,
                    const Rational& c) {
  const auto head = construct_extremal_cont(x1, b);
  const Rational d = b + delta + c;
  const auto tail = construct_extremal_cont(x2, c).reflect(d);
  return head.set_union(IntervalUnion::segment(b, b + delta)).set_union(tail);
}

Outcome envelope_fixtures() {
  struct Glue {
    Rational x1, b, delta, x2, c;
  };
  const std::vector<Glue> glue = {
      {Rational(3, 5), 1, 1, Rational(3, 5), 1},
      {Rational(1, 3), 1, 1, Rational(1, 2), 2},
      {1, 2, Rational(3, 2), Rational(2, 7), 1},
      {Rational(1, 4), 1, 2, Rational(5, 6), Rational(3, 2)},
  };
  std::vector<std::string> bad;
  int passed = 0;
  for (const auto& g : glue) {
    const auto a = glued(g.x1, g.b, g.delta, g.x2, g.c);
    try {
      const auto rep = critical_envelope_check(a);
      const auto ok = rep.passing();
      if (std::find(ok.begin(), ok.end(), g.b) != ok.end()) {
        ++passed;
      } else {
        bad.push_back("constructed b not passing for " + a.to_string());
      }
    } catch (const Error& e) {
      bad.push_back(a.to_string() + ": " + e.what());
    }
  }
  try {
    if (critical_envelope_check(IntervalUnion::segment(0, 5)).passing() == std::vector<Rational>{Rational(0)}) {
      ++passed;
    } else {
      bad.push_back("[0,5] degenerate case");
    }
  } catch (const Error& e) {
    bad.push_back(std::string("[0,5]: ") + e.what());
  }

  // Head replaced by a denser, unstable piece of the same measure.
  const IntervalUnion bent({Interval{0, 0}, Interval{Rational(1, 4), Rational(1, 2)}, Interval{Rational(3, 4), 2},
                            Interval{Rational(12, 5), Rational(79, 30)}, Interval{3, 3}});
  std::string perturbed;
  const auto c = envelope_check_at(bent, 1);
  if (c.pass || !c.failing_x) {
    bad.push_back("perturbed fixture passed");
  } else {
    perturbed = c.failing_piece + " breakpoint x=" + c.failing_x->to_string() + " (g=" + c.g_at_failure.to_string() +
                " > " + c.bound_at_failure.to_string() + ")";
  }
  for (const auto& b : bad) std::cerr << "  criterion 9: " << b << "\n";
  Outcome o;
  o.pass = bad.empty();
  o.summary = std::to_string(passed) + " critical fixtures pass; perturbed fixture fails at " +
              (perturbed.empty() ? "nothing" : perturbed);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "reference fixtures", reference_fixtures},
    {2, "extremal construction sweep", sharpness_sweep},
    {3, "exhaustive census", census_exhaustive},
    {4, "Freiman bound and 3k-4 brute force", freiman_brute_force},
    {5, "Grynkiewicz brute force", grynkiewicz_brute_force},
    {6, "continuous fixtures", continuous_fixtures},
    {7, "Ruzsa random pairs", ruzsa_random},
    {8, "monotonicity and breakpoints", monotone_and_continuity},
    {9, "critical envelope", envelope_fixtures},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : kCriteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d %s [%s] %s (%.1fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.summary.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
