#include "lstab/intset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

namespace lstab {

namespace {

std::atomic<std::size_t> g_capacity{4096};

constexpr std::size_t kBits = IntSet::kWordBits;

void check_element(std::int64_t x) {
  if (x < 0) {
    throw Error("negative element " + std::to_string(x) + " (universe is the nonnegative integers)");
  }
  if (static_cast<std::size_t>(x) > g_capacity.load(std::memory_order_relaxed)) {
    throw Error("element " + std::to_string(x) + " exceeds capacity " +
                std::to_string(g_capacity.load()));
  }
}

std::size_t words_for(std::int64_t max_element) {
  return static_cast<std::size_t>(max_element) / kBits + 1;
}

// Mask selecting bits [0, b] of a word.
constexpr IntSet::Word low_mask(std::size_t b) {
  return b + 1 >= kBits ? ~IntSet::Word{0} : ((IntSet::Word{1} << (b + 1)) - 1);
}

}  // namespace

std::size_t capacity() { return g_capacity.load(std::memory_order_relaxed); }

void set_capacity(std::size_t max_element) {
  if (max_element == 0) throw Error("capacity must be positive");
  g_capacity.store(max_element, std::memory_order_relaxed);
}

IntSet::IntSet(std::vector<Word> words) : words_(std::move(words)) { trim(); }

IntSet::IntSet(std::initializer_list<std::int64_t> elements)
    : IntSet(from_elements(std::span<const std::int64_t>(elements.begin(), elements.size()))) {}

IntSet IntSet::from_elements(std::span<const std::int64_t> elements) {
  std::int64_t hi = -1;
  for (auto x : elements) {
    check_element(x);
    hi = std::max(hi, x);
  }
  if (hi < 0) return IntSet{};
  std::vector<Word> words(words_for(hi), 0);
  for (auto x : elements) words[x / kBits] |= Word{1} << (x % kBits);
  return IntSet(std::move(words));
}

IntSet IntSet::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return IntSet{};
  check_element(lo);
  check_element(hi);
  std::vector<Word> words(words_for(hi), 0);
  for (std::int64_t x = lo; x <= hi; ++x) words[x / kBits] |= Word{1} << (x % kBits);
  return IntSet(std::move(words));
}

IntSet IntSet::from_words(std::vector<Word> words) {
  IntSet s(std::move(words));
  if (!s.empty()) check_element(s.max());
  return s;
}

void IntSet::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::size_t IntSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool IntSet::contains(std::int64_t x) const noexcept {
  if (x < 0) return false;
  const auto w = static_cast<std::size_t>(x) / kBits;
  return w < words_.size() && ((words_[w] >> (x % kBits)) & 1U);
}

std::int64_t IntSet::min() const {
  if (empty()) throw Error("empty set");
  for (std::size_t w = 0;; ++w) {
    if (words_[w]) return static_cast<std::int64_t>(w * kBits + std::countr_zero(words_[w]));
  }
}

std::int64_t IntSet::max() const {
  if (empty()) throw Error("empty set");
  const auto w = words_.size() - 1;
  return static_cast<std::int64_t>(w * kBits + (kBits - 1 - std::countl_zero(words_[w])));
}

std::vector<std::int64_t> IntSet::elements() const {
  std::vector<std::int64_t> out;
  out.reserve(size());
  for_each([&](std::int64_t x) { out.push_back(x); });
  return out;
}

IntSet IntSet::prefix(std::int64_t x) const { return window(0, x); }

std::size_t IntSet::prefix_count(std::int64_t x) const noexcept { return count_in(0, x); }

IntSet IntSet::window(std::int64_t lo, std::int64_t hi) const {
  lo = std::max<std::int64_t>(lo, 0);
  if (empty() || hi < lo) return IntSet{};
  hi = std::min(hi, max());
  if (hi < lo) return IntSet{};
  std::vector<Word> words(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(words_for(hi)));
  words.back() &= low_mask(static_cast<std::size_t>(hi) % kBits);
  const auto lw = static_cast<std::size_t>(lo) / kBits;
  for (std::size_t w = 0; w < lw; ++w) words[w] = 0;
  if (lo % kBits) words[lw] &= ~((Word{1} << (lo % kBits)) - 1);
  return IntSet(std::move(words));
}

std::size_t IntSet::count_in(std::int64_t lo, std::int64_t hi) const noexcept {
  lo = std::max<std::int64_t>(lo, 0);
  if (empty() || hi < lo) return 0;
  hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(words_.size() * kBits) - 1);
  if (hi < lo) return 0;
  const auto lw = static_cast<std::size_t>(lo) / kBits;
  const auto hw = static_cast<std::size_t>(hi) / kBits;
  std::size_t n = 0;
  for (std::size_t w = lw; w <= hw; ++w) {
    Word bits = words_[w];
    if (w == hw) bits &= low_mask(static_cast<std::size_t>(hi) % kBits);
    if (w == lw && lo % kBits) bits &= ~((Word{1} << (lo % kBits)) - 1);
    n += std::popcount(bits);
  }
  return n;
}

IntSet IntSet::translate(std::int64_t t) const {
  if (empty() || t == 0) return *this;
  if (min() + t < 0) throw Error("translate would produce negative elements");
  check_element(max() + t);
  if (t > 0) {
    // Shift-or of a single bit set by t is exactly the translate.
    return sumset(*this, IntSet{t});
  }
  std::vector<std::int64_t> shifted;
  shifted.reserve(size());
  for_each([&](std::int64_t x) { shifted.push_back(x + t); });
  return from_elements(shifted);
}

IntSet IntSet::reflect(std::int64_t n) const {
  if (empty()) return IntSet{};
  if (max() > n) throw Error("reflect: element above reflection point");
  std::vector<std::int64_t> out;
  out.reserve(size());
  for_each([&](std::int64_t x) { out.push_back(n - x); });
  return from_elements(out);
}

IntSet IntSet::set_union(const IntSet& other) const {
  std::vector<Word> words(std::max(words_.size(), other.words_.size()), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) words[i] |= words_[i];
  for (std::size_t i = 0; i < other.words_.size(); ++i) words[i] |= other.words_[i];
  return IntSet(std::move(words));
}

IntSet IntSet::set_intersection(const IntSet& other) const {
  std::vector<Word> words(std::min(words_.size(), other.words_.size()), 0);
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = words_[i] & other.words_[i];
  return IntSet(std::move(words));
}

bool IntSet::is_subset_of(const IntSet& other) const noexcept {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) throw Error("empty set");
  // Shift the denser operand by each element of the sparser one.
  const IntSet& shifts = a.size() <= b.size() ? a : b;
  const IntSet& base = a.size() <= b.size() ? b : a;
  const std::int64_t top = a.max() + b.max();
  if (static_cast<std::size_t>(top) > capacity()) {
    throw Error("sumset max element " + std::to_string(top) + " exceeds capacity " +
                std::to_string(capacity()));
  }
  const auto src = base.words();
  std::vector<IntSet::Word> out(words_for(top) + 1, 0);
  shifts.for_each([&](std::int64_t s) {
    const auto ws = static_cast<std::size_t>(s) / kBits;
    const auto bs = static_cast<unsigned>(s % kBits);
    if (bs == 0) {
      for (std::size_t i = 0; i < src.size(); ++i) out[i + ws] |= src[i];
    } else {
      for (std::size_t i = 0; i < src.size(); ++i) {
        out[i + ws] |= src[i] << bs;
        out[i + ws + 1] |= src[i] >> (kBits - bs);
      }
    }
  });
  return IntSet::from_words(std::move(out));
}

IntSet k_fold_sum(const IntSet& a, int k) {
  if (k <= 0) throw Error("k must be positive");
  if (a.empty()) throw Error("empty set");
  IntSet acc = a;
  for (int i = 1; i < k; ++i) acc = sumset(acc, a);
  return acc;
}

SetStats stats(const IntSet& a) {
  if (a.empty()) throw Error("empty set");
  SetStats s;
  s.min = a.min();
  s.max = a.max();
  s.diam = s.max - s.min;
  std::int64_t g = 0;
  a.for_each([&](std::int64_t x) { g = std::gcd(g, x - s.min); });
  s.gcd_star = g == 0 ? 1 : g;
  s.n_a = s.diam / s.gcd_star;
  s.cardinality = a.size();
  return s;
}

IntSet normalize(const IntSet& a) {
  const auto s = stats(a);
  if (s.min == 0 && s.gcd_star == 1) return a;
  std::vector<std::int64_t> out;
  out.reserve(s.cardinality);
  a.for_each([&](std::int64_t x) { out.push_back((x - s.min) / s.gcd_star); });
  return IntSet::from_elements(out);
}

}  // namespace lstab
