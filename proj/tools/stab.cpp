// stab: command-line front end for the leftstable library.
//
// Exit codes: 0 success / PASS, 1 verification FAIL or inconsistency,
// 2 usage or input error.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lstab/census.hpp"
#include "lstab/continuum.hpp"
#include "lstab/freiman.hpp"
#include "lstab/intset.hpp"
#include "lstab/set_literal.hpp"
#include "lstab/stability.hpp"

using namespace lstab;

namespace {

enum class Format { kText, kCsv, kJson };

struct Options {
  std::int64_t n = 0;
  std::string x;
  std::string d = "1";
  std::string a;
  std::string b;
  std::string split;
  int k = 2;
  std::int64_t s_prime = -1;
  unsigned jobs = 1;
  std::int64_t max_n = 0;
  std::int64_t census_cap = kDefaultCensusMaxN;
  std::int64_t grid = 0;
  double budget = 0;
  Format format = Format::kText;
  std::size_t capacity = 0;
  bool dump_sets = false;
};

struct DiscInput {
  IntSet set;
  std::int64_t offset = 0;
};

// Integer literals may be negative; the set is shifted to start at 0 and the
// shift is kept so results can be reported in the caller's coordinates.
DiscInput read_disc(const std::string& literal, const char* flag) {
  if (literal.empty()) throw Error(std::string("missing ") + flag);
  const auto values = parse_int_list(literal);
  if (values.empty()) throw Error(std::string(flag) + ": empty set");
  DiscInput in;
  in.offset = values.front();
  std::vector<std::int64_t> shifted;
  shifted.reserve(values.size());
  for (auto v : values) shifted.push_back(v - in.offset);
  in.set = IntSet::from_elements(shifted);
  return in;
}

bool looks_continuous(const std::string& s) {
  return !s.empty() && (s.front() == '{' || s.ends_with(".json"));
}

IntervalUnion read_cont(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(std::string("missing ") + flag);
  if (value.front() == '{') return interval_union_from_json(value);
  std::ifstream in(value);
  if (!in) throw Error(std::string(flag) + ": cannot open " + value);
  std::stringstream buf;
  buf << in.rdbuf();
  return interval_union_from_json(buf.str());
}

Rational read_rational(const std::string& s, const char* flag) {
  if (s.empty()) throw Error(std::string("missing ") + flag);
  return Rational::parse(s);
}

void print_report(const Report& r, Format f) {
  switch (f) {
    case Format::kText:
      std::cout << r.to_text();
      break;
    case Format::kCsv: {
      std::string head, row;
      for (const auto& [k, v] : r.fields) {
        head += k + ",";
        row += v + ",";
      }
      std::cout << head << "RESULT\n" << row << to_string(r.result) << "\n";
      break;
    }
    case Format::kJson: {
      nlohmann::ordered_json j;
      for (const auto& [k, v] : r.fields) j[k] = v;
      j["RESULT"] = std::string(to_string(r.result));
      std::cout << j.dump() << "\n";
      break;
    }
  }
}

int verdict_exit(const Report& r) { return r.result == Verdict::kFail ? 1 : 0; }

// Single value outputs: bare in text/csv, {"value": ...} in json.
void print_value(const std::string& key, const std::string& v, Format f) {
  if (f == Format::kJson) {
    nlohmann::ordered_json j;
    j[key] = v;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << v << "\n";
  }
}

int cmd_sumset(const Options& o) {
  const auto a = read_disc(o.a, "--a");
  IntSet out;
  std::int64_t offset = 0;
  if (o.b.empty()) {
    out = k_fold_sum(a.set, o.k);
    offset = a.offset * o.k;
  } else {
    const auto b = read_disc(o.b, "--b");
    out = sumset(a.set, b.set);
    offset = a.offset + b.offset;
  }
  print_value("sumset", format_set_literal(out, offset), o.format);
  return 0;
}

int cmd_stable(const Options& o) {
  Report r;
  if (looks_continuous(o.a)) {
    const auto u = read_cont(o.a, "--a");
    const auto s = is_left_stable_cont(u);
    r.add_flag("STABLE", s.stable);
    if (s.witness) r.add("WITNESS", "[" + s.witness->lo.to_string() + "," + s.witness->hi.to_string() + "]");
    r.result = s.stable ? Verdict::kPass : Verdict::kFail;
  } else {
    const auto a = read_disc(o.a, "--a");
    const auto s = is_left_stable(a.set);
    r.add_flag("STABLE", s.stable);
    if (s.witness) {
      r.add("WITNESS_A", s.witness->a).add("WITNESS_B", s.witness->b).add("WITNESS_SUM", s.witness->sum);
    }
    r.result = s.stable ? Verdict::kPass : Verdict::kFail;
  }
  print_report(r, o.format);
  return verdict_exit(r);
}

int cmd_hdisc(const Options& o) {
  const auto x = read_rational(o.x, "--x");
  if (!x.is_integer()) throw Error("--x must be an integer");
  const auto h = h_disc(o.n, x.floor());
  if (o.format == Format::kText) {
    std::cout << h.value << "\n";
  } else {
    Report r;
    r.add("N", h.n).add("X", h.x).add("K", h.k).add("H", h.value);
    print_report(r, o.format);
  }
  return 0;
}

int cmd_hcont(const Options& o) {
  const auto x = read_rational(o.x, "--x");
  const auto d = read_rational(o.d, "--d");
  const auto h = h_cont(x, d);
  if (o.format == Format::kText) {
    std::cout << h.to_string() << "\n";
  } else {
    Report r;
    r.add("X", x.to_string()).add("D", d.to_string());
    r.add("K", x.sign() == 0 ? 0LL : static_cast<long long>(h_cont_k(x, d)));
    r.add("H", h.to_string());
    print_report(r, o.format);
  }
  return 0;
}

int cmd_extremal_disc(const Options& o) {
  const auto x = read_rational(o.x, "--x");
  if (!x.is_integer()) throw Error("--x must be an integer");
  if (o.format == Format::kText) {
    std::cout << format_set_literal(construct_extremal_disc(o.n, x.floor())) << "\n";
    return 0;
  }
  const auto l = extremal_disc_layout(o.n, x.floor());
  Report r;
  r.add("N", l.n).add("X", l.x).add("K", l.k).add("H", l.h).add("TAIL_START", l.tail_start);
  r.add("SET", format_set_literal(l.set));
  r.add_flag("SANDWICH_LOWER", l.sandwich_lower).add_flag("SANDWICH_UPPER", l.sandwich_upper);
  r.add_flag("STABLE", l.stable).add_flag("CARDINALITY_OK", l.cardinality_ok).add_flag("PREFIX_OK", l.prefix_ok);
  r.result = l.all_ok() ? Verdict::kPass : Verdict::kFail;
  print_report(r, o.format);
  return verdict_exit(r);
}

int cmd_extremal_cont(const Options& o) {
  const auto x = read_rational(o.x, "--x");
  const auto d = read_rational(o.d, "--d");
  if (o.format == Format::kText) {
    std::cout << construct_extremal_cont(x, d).to_string() << "\n";
    return 0;
  }
  if (o.format == Format::kJson) {
    std::cout << to_json(construct_extremal_cont(x, d)) << "\n";
    return 0;
  }
  const auto l = extremal_cont_layout(x, d);
  Report r;
  r.add("X", x.to_string()).add("D", d.to_string()).add("K", l.k).add("SET", l.set.to_string());
  r.add("MEASURE", measure(l.set).to_string()).add("PREFIX", prefix_measure(l.set, x).to_string());
  r.add_flag("DISJOINT", l.disjoint).add_flag("HALF_MEASURE", l.half_measure);
  r.add_flag("STABLE", l.stable).add_flag("PREFIX_OK", l.prefix_ok);
  r.result = l.all_ok() ? Verdict::kPass : Verdict::kFail;
  print_report(r, o.format);
  return verdict_exit(r);
}

int cmd_classify(const Options& o) {
  const auto a = read_disc(o.a, "--a");
  const auto c = classify(a.set);
  Report r;
  r.add("CARDINALITY", c.cardinality).add("N_A", c.n_a).add("SUMSET_SIZE", c.sum_size).add("BOUND", c.bound);
  r.add("CATEGORY", std::string(to_string(c.category)));
  print_report(r, o.format);
  return 0;
}

int cmd_decompose(const Options& o) {
  const auto a = read_disc(o.a, "--a");
  const auto dc = decompose_critical(a.set);
  Report r;
  r.add("STEP", dc.step).add("OFFSET", dc.offset + a.offset).add("N_A", dc.n_a);
  r.add("A1", format_set_literal(dc.a1));
  r.add("I", std::to_string(dc.run_start) + "-" + std::to_string(dc.run_end));
  r.add("A2", format_set_literal(dc.a2));
  r.add_flag("REASSEMBLES", dc.reassemble() == normalize(a.set));
  r.result = dc.reassemble() == normalize(a.set) ? Verdict::kPass : Verdict::kFail;
  print_report(r, o.format);
  return verdict_exit(r);
}

int cmd_grynkiewicz(const Options& o) {
  const auto a = read_disc(o.a, "--a");
  const auto b = read_disc(o.b, "--b");
  std::int64_t sp = o.s_prime;
  if (sp < 0) {
    sp = grynkiewicz_params(static_cast<std::int64_t>(a.set.size()), static_cast<std::int64_t>(b.set.size())).s_prime_max;
  }
  const auto g = grynkiewicz_check(a.set, b.set, sp);
  const auto r = g.to_report();
  print_report(r, o.format);
  return verdict_exit(r);
}

int cmd_ruzsa(const Options& o) {
  const auto r = ruzsa_check(read_cont(o.a, "--a"), read_cont(o.b, "--b")).to_report();
  print_report(r, o.format);
  return verdict_exit(r);
}

int cmd_envelope(const Options& o) {
  const auto a = read_cont(o.a, "--a");
  if (!o.split.empty()) {
    const auto c = envelope_check_at(a, read_rational(o.split, "--split"));
    Report r;
    r.add("B", c.b.to_string());
    if (!c.pass) {
      r.add("PIECE", c.failing_piece).add("BREAKPOINT", c.failing_x->to_string());
      r.add("G", c.g_at_failure.to_string()).add("BOUND", c.bound_at_failure.to_string());
    }
    r.result = c.pass ? Verdict::kPass : Verdict::kFail;
    print_report(r, o.format);
    return verdict_exit(r);
  }
  const auto r = critical_envelope_check(a).to_report();
  print_report(r, o.format);
  return verdict_exit(r);
}

int cmd_census(const Options& o) {
  CensusOptions opts;
  opts.jobs = o.jobs;
  std::int64_t lo = o.n, hi = o.n;
  if (o.max_n > 0) {
    lo = o.n > 0 ? o.n : 2;
    hi = o.max_n;
  }
  if (hi <= 0) throw Error("census needs --n or --max-n");
  if (hi > o.census_cap) {
    throw Error("n = " + std::to_string(hi) + " is above the census cap " + std::to_string(o.census_cap) +
                " (raise it with --cap)");
  }
  std::optional<std::int64_t> only_x;
  if (!o.x.empty()) only_x = read_rational(o.x, "--x").floor();

  const auto start = std::chrono::steady_clock::now();
  bool exceeded = false;
  std::cout << census_csv_header() << "\n";
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (o.budget > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > o.budget) {
      std::cerr << "census: wall-clock budget exhausted before n=" << n << "\n";
      return 1;
    }
    for (const auto& r : sharpness_census_all(n, opts)) {
      if (only_x && r.x != *only_x) continue;
      std::cout << census_csv_row(r) << "\n";
      if (o.dump_sets) {
        for (const auto& s : r.extremal_sets) std::cout << "# " << format_set_literal(s) << "\n";
      }
      if (r.exceeds_bound()) {
        exceeded = true;
        std::cerr << "census: bound exceeded at n=" << r.n << " x=" << r.x << ": " << r.achieved_max << " > "
                  << r.bound << " by " << format_set_literal(r.extremal_sets.front()) << "\n";
      }
    }
  }
  return exceeded ? 1 : 0;
}

int cmd_verify_paper(const Options& o) {
  Report r;
  bool ok = true;
  auto check = [&](const std::string& name, bool pass) {
    r.add(name, pass ? "PASS" : "FAIL");
    ok = ok && pass;
  };
  check("HDISC_48_13", h_disc(48, 13).value == 3);
  check("HDISC_48_12", h_disc(48, 12).value == 3);
  check("REMARK_SETS", verify_remark_sets().result == Verdict::kPass);
  bool ext_ok = false;
  try {
    ext_ok = construct_extremal_disc(48, 13) == remark_set_a();
  } catch (const InconsistencyError&) {
  }
  check("EXTREMAL_DISC_48_13", ext_ok);
  check("HCONT_1_1", h_cont(1, 1) == Rational(1, 2));
  check("HCONT_1/2_1", h_cont(Rational(1, 2), 1) == Rational(1, 6));
  check("HCONT_3/5_1", h_cont(Rational(3, 5), 1) == Rational(7, 30));
  const auto expected = IntervalUnion({Interval{0, 0}, Interval{Rational(11, 30), Rational(3, 5)},
                                       Interval{Rational(11, 15), 1}});
  bool cont_ok = false;
  try {
    cont_ok = construct_extremal_cont(Rational(3, 5), 1) == expected;
  } catch (const InconsistencyError&) {
  }
  check("EXTREMAL_CONT_3/5_1", cont_ok);
  r.result = ok ? Verdict::kPass : Verdict::kFail;
  print_report(r, o.format);
  return verdict_exit(r);
}

int cmd_emit_curve(const Options& o) {
  if (o.grid > 0) {
    const auto d = read_rational(o.d, "--d");
    if (d.sign() <= 0) throw Error("--d must be positive");
    std::cout << "x,h\n";
    for (std::int64_t i = 1; i <= o.grid; ++i) {
      const Rational x = d * Rational(i, o.grid);
      std::cout << x.to_string() << "," << h_cont(x, d).to_string() << "\n";
    }
    return 0;
  }
  if (o.n < 2) throw Error("emit-curve needs --n >= 2 or --grid-denominator > 0");
  std::cout << "x,h\n";
  for (std::int64_t x = 2; x <= o.n; ++x) std::cout << x << "," << h_disc(o.n, x).value << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-stable set toolkit"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  app.add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->group("Global");
  app.add_option("--capacity", o.capacity, "Largest admissible element")->group("Global");
  app.fallthrough();

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const std::vector<Cmd> cmds = {
      {"sumset", "A+B, or k-fold sum of A when --b is absent", cmd_sumset},
      {"stable", "Left-stability test (set literal or interval JSON)", cmd_stable},
      {"hdisc", "Discrete bound h(n, x)", cmd_hdisc},
      {"hcont", "Continuous bound d h(x/d)", cmd_hcont},
      {"extremal-disc", "Extremal discrete set for (n, x)", cmd_extremal_disc},
      {"extremal-cont", "Extremal interval union for (x, d)", cmd_extremal_cont},
      {"classify", "Compare |A+A| with min(3|A|-3, |A|+N_A)", cmd_classify},
      {"decompose", "A1 / I / A2 split of a critical set", cmd_decompose},
      {"grynkiewicz", "Check |A+B| >= |A| + s'(|B|-2) + 1", cmd_grynkiewicz},
      {"ruzsa", "Ruzsa's lower bounds for lambda(A+B)", cmd_ruzsa},
      {"envelope", "Prefix envelope of a critical interval union", cmd_envelope},
      {"census", "Exhaustive sharpness census", cmd_census},
      {"verify-paper", "Run the published fixtures", cmd_verify_paper},
      {"emit-curve", "CSV of (x, h(x))", cmd_emit_curve},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : cmds) subs[c.name] = app.add_subcommand(c.name, c.help);

  subs["sumset"]->add_option("--a", o.a)->required();
  subs["sumset"]->add_option("--b", o.b);
  subs["sumset"]->add_option("--k", o.k, "Summands for the k-fold sum")->check(CLI::PositiveNumber);
  subs["stable"]->add_option("--a", o.a)->required();
  subs["hdisc"]->add_option("--n", o.n)->required();
  subs["hdisc"]->add_option("--x", o.x)->required();
  subs["hcont"]->add_option("--x", o.x)->required();
  subs["hcont"]->add_option("--d", o.d);
  subs["extremal-disc"]->add_option("--n", o.n)->required();
  subs["extremal-disc"]->add_option("--x", o.x)->required();
  subs["extremal-cont"]->add_option("--x", o.x)->required();
  subs["extremal-cont"]->add_option("--d", o.d);
  subs["classify"]->add_option("--a", o.a)->required();
  subs["decompose"]->add_option("--a", o.a)->required();
  subs["grynkiewicz"]->add_option("--a", o.a)->required();
  subs["grynkiewicz"]->add_option("--b", o.b)->required();
  subs["grynkiewicz"]->add_option("--s-prime", o.s_prime, "Defaults to the largest admissible value");
  subs["ruzsa"]->add_option("--a", o.a, "Interval JSON or path")->required();
  subs["ruzsa"]->add_option("--b", o.b, "Interval JSON or path")->required();
  subs["envelope"]->add_option("--a", o.a, "Interval JSON or path")->required();
  subs["envelope"]->add_option("--split", o.split, "Check only this split point");
  subs["census"]->add_option("--n", o.n);
  subs["census"]->add_option("--max-n", o.max_n);
  subs["census"]->add_option("--x", o.x);
  subs["census"]->add_option("--jobs", o.jobs)->check(CLI::NonNegativeNumber);
  subs["census"]->add_option("--budget", o.budget, "Wall-clock budget in seconds");
  subs["census"]->add_option("--cap", o.census_cap, "Largest n the census will attempt");
  subs["census"]->add_flag("--dump-sets", o.dump_sets);
  subs["emit-curve"]->add_option("--n", o.n);
  subs["emit-curve"]->add_option("--d", o.d);
  subs["emit-curve"]->add_option("--grid-denominator", o.grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (o.capacity > 0) set_capacity(o.capacity);
    for (const auto& c : cmds) {
      if (subs[c.name]->parsed()) return c.run(o);
    }
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
