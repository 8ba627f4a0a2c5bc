#include "lstab/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

#include "lstab/set_literal.hpp"
#include "lstab/stability.hpp"

namespace lstab {

namespace {

using Word = IntSet::Word;
constexpr std::int64_t kBits = 64;

struct Bits {
  std::vector<Word> w;

  explicit Bits(std::int64_t n) : w(static_cast<std::size_t>(n / kBits + 1), 0) {}
  bool test(std::int64_t i) const { return (w[i / kBits] >> (i % kBits)) & 1U; }
  void set(std::int64_t i) { w[i / kBits] |= Word{1} << (i % kBits); }
};

struct Node {
  std::int64_t next = 1;  // next position to decide
  Bits in;
  Bits forced;
  std::int64_t count = 0;
};

// Depth-first search over membership decisions with closure forcing.
class Search {
 public:
  Search(std::int64_t n, const EnumerateConstraints& c) : n_(n), c_(c) {}

  Node root() const {
    Node r{1, Bits(n_), Bits(n_), 2};
    r.in.set(0);
    r.in.set(n_);
    return r;
  }

  // Runs the subtree under `node`. Nodes with next == stop_at are handed to
  // `frontier` instead of being expanded (stop_at < 0 disables this).
  template <typename Leaf, typename Frontier>
  void run(Node node, std::int64_t stop_at, Leaf&& leaf, Frontier&& frontier) const {
    if (!feasible(node)) return;
    if (node.next >= n_) {
      emit(node, leaf);
      return;
    }
    if (node.next == stop_at) {
      frontier(std::move(node));
      return;
    }
    const std::int64_t p = node.next;
    if (!node.forced.test(p)) {
      Node skip = node;
      skip.next = p + 1;
      run(std::move(skip), stop_at, leaf, frontier);
    }
    include(node, p);
    node.next = p + 1;
    run(std::move(node), stop_at, leaf, frontier);
  }

 private:
  bool feasible(const Node& node) const {
    if (!c_.require_cardinality) return true;
    const std::int64_t target = *c_.require_cardinality;
    // Positions node.next .. n-1 are still open.
    if (node.count + (n_ - node.next) < target) return false;
    std::int64_t pending = 0;
    for (std::int64_t i = node.next; i < n_; ++i) pending += node.forced.test(i) ? 1 : 0;
    return node.count + pending <= target;
  }

  void include(Node& node, std::int64_t p) const {
    node.in.set(p);
    ++node.count;
    // Every a + p <= n with a already present (p itself included) is forced.
    for (std::int64_t a = 0; a + p <= n_ && a < p + 1; ++a) {
      if (node.in.test(a)) node.forced.set(a + p);
    }
  }

  template <typename Leaf>
  void emit(const Node& node, Leaf&& leaf) const {
    if (c_.require_cardinality && node.count != *c_.require_cardinality) return;
    if (c_.require_gcd1) {
      std::int64_t g = 0;
      for (std::int64_t i = 1; i <= n_ && g != 1; ++i) {
        if (node.in.test(i)) g = std::gcd(g, i);
      }
      if (g != 1) return;
    }
    leaf(IntSet::from_words(node.in.w));
  }

  std::int64_t n_;
  EnumerateConstraints c_;
};

void check_n(std::int64_t n) {
  if (n < 2) throw Error("census needs n >= 2");
  if (static_cast<std::size_t>(n) > capacity()) {
    throw Error("n = " + std::to_string(n) + " exceeds capacity " + std::to_string(capacity()));
  }
}

}  // namespace

void enumerate_left_stable(std::int64_t n, const EnumerateConstraints& constraints,
                           const std::function<void(const IntSet&)>& visit) {
  check_n(n);
  Search search(n, constraints);
  search.run(search.root(), -1, visit, [](Node&&) {});
}

std::vector<IntSet> enumerate_left_stable(std::int64_t n, const EnumerateConstraints& constraints,
                                          const CensusOptions& options) {
  check_n(n);
  Search search(n, constraints);
  std::vector<IntSet> out;
  auto collect = [&](const IntSet& s) { out.push_back(s); };

  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  const std::int64_t stop_at = 1 + std::max(0, options.split_depth);
  if (jobs <= 1 || stop_at >= n) {
    search.run(search.root(), -1, collect, [](Node&&) {});
    return out;
  }

  // Expand the first split_depth decisions, then farm the frontier out.
  // Sets completed above the frontier keep their slot in the order.
  struct Task {
    std::optional<Node> node;
    std::vector<IntSet> results;
  };
  std::vector<Task> tasks;
  search.run(
      search.root(), stop_at,
      [&](const IntSet& s) {
        if (tasks.empty() || tasks.back().node) tasks.push_back(Task{});
        tasks.back().results.push_back(s);
      },
      [&](Node&& node) { tasks.push_back(Task{std::move(node), {}}); });

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < tasks.size(); i = cursor++) {
      if (!tasks[i].node) continue;
      auto& results = tasks[i].results;
      search.run(std::move(*tasks[i].node), -1, [&](const IntSet& s) { results.push_back(s); },
                 [](Node&&) {});
    }
  };
  std::vector<std::thread> pool;
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (auto& t : tasks) {
    for (auto& s : t.results) out.push_back(std::move(s));
  }
  return out;
}

std::vector<IntSet> theorem_class(std::int64_t n, const CensusOptions& options) {
  EnumerateConstraints c;
  c.require_cardinality = (n + 1) / 2 + 1;
  c.require_gcd1 = true;
  return enumerate_left_stable(n, c, options);
}

std::vector<CensusResult> sharpness_census_all(std::int64_t n, const CensusOptions& options) {
  const auto sets = theorem_class(n, options);
  std::vector<CensusResult> out;
  for (std::int64_t x = 2; x <= n; ++x) {
    CensusResult r;
    r.n = n;
    r.x = x;
    r.bound = h_disc(n, x).value + 1;
    r.total_enumerated = static_cast<std::int64_t>(sets.size());
    for (const auto& s : sets) {
      const auto c = static_cast<std::int64_t>(s.prefix_count(x));
      if (c > r.achieved_max) {
        r.achieved_max = c;
        r.extremal_sets.clear();
      }
      if (c == r.achieved_max) r.extremal_sets.push_back(s);
    }
    out.push_back(std::move(r));
  }
  return out;
}

CensusResult sharpness_census(std::int64_t n, std::int64_t x, const CensusOptions& options) {
  if (x < 2 || x > n) throw Error("x out of range");
  auto all = sharpness_census_all(n, options);
  return std::move(all[static_cast<std::size_t>(x - 2)]);
}

std::string census_csv_header() { return "n,x,bound,achieved_max,num_extremal,total_enumerated"; }

std::string census_csv_row(const CensusResult& r) {
  return std::to_string(r.n) + "," + std::to_string(r.x) + "," + std::to_string(r.bound) + "," +
         std::to_string(r.achieved_max) + "," + std::to_string(r.extremal_sets.size()) + "," +
         std::to_string(r.total_enumerated);
}

IntSet remark_set_a() { return parse_set_literal("0,11-13,22-26,33-48"); }
IntSet remark_set_b() { return parse_set_literal("0,10-12,20-24,30-36,40-48"); }

Report verify_remark_sets() {
  Report r;
  bool ok = true;
  auto check = [&](const std::string& name, const IntSet& s) {
    const auto st = stats(s);
    const bool stable = st.min == 0 && is_left_stable(s).stable;
    const auto prefix = static_cast<std::int64_t>(s.prefix_count(13));
    const std::int64_t h13 = h_disc(48, 13).value;
    r.add(name + "_SET", format_set_literal(s));
    r.add_flag(name + "_STABLE", stable);
    r.add(name + "_MIN", st.min).add(name + "_MAX", st.max).add(name + "_GCD", st.gcd_star);
    r.add(name + "_CARDINALITY", static_cast<long long>(st.cardinality));
    r.add(name + "_PREFIX_13", prefix);
    ok = ok && stable && st.min == 0 && st.max == 48 && st.gcd_star == 1 && st.cardinality == 25 &&
         prefix == h13 + 1;
  };
  const IntSet a = remark_set_a();
  const IntSet b = remark_set_b();
  check("A", a);
  check("B", b);
  r.add("H_13", h_disc(48, 13).value);
  r.add_flag("DISTINCT", a != b);
  ok = ok && a != b;
  r.result = ok ? Verdict::kPass : Verdict::kFail;
  return r;
}

}  // namespace lstab
