#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lstab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a value the mathematics says must hold does not. These are
/// findings, not input errors: either the code or the claimed statement is
/// wrong for the reported arguments.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Largest element any IntSet may hold. Defaults to 4096.
std::size_t capacity();
void set_capacity(std::size_t max_element);

/// Finite set of nonnegative integers backed by a dense bit vector.
///
/// Values are immutable once built. The word vector never carries trailing
/// zero words, so two equal sets always have identical storage.
class IntSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  IntSet() = default;
  IntSet(std::initializer_list<std::int64_t> elements);

  static IntSet from_elements(std::span<const std::int64_t> elements);
  /// Consecutive integers lo..hi; empty when hi < lo.
  static IntSet range(std::int64_t lo, std::int64_t hi);
  static IntSet from_words(std::vector<Word> words);

  bool empty() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept;
  bool contains(std::int64_t x) const noexcept;

  std::int64_t min() const;
  std::int64_t max() const;

  std::vector<std::int64_t> elements() const;
  std::span<const Word> words() const noexcept { return words_; }

  /// Elements in [0, x].
  IntSet prefix(std::int64_t x) const;
  std::size_t prefix_count(std::int64_t x) const noexcept;
  /// Elements in [lo, hi].
  IntSet window(std::int64_t lo, std::int64_t hi) const;
  std::size_t count_in(std::int64_t lo, std::int64_t hi) const noexcept;

  /// {x + t}; every shifted element must stay nonnegative.
  IntSet translate(std::int64_t t) const;
  /// {n - x}; requires max() <= n.
  IntSet reflect(std::int64_t n) const;

  IntSet set_union(const IntSet& other) const;
  IntSet set_intersection(const IntSet& other) const;
  bool is_subset_of(const IntSet& other) const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<std::int64_t>(w * kWordBits + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const IntSet&, const IntSet&) = default;
  /// Orders by sorted element sequence (lexicographic).
  friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b);

 private:
  explicit IntSet(std::vector<Word> words);
  void trim() noexcept;

  std::vector<Word> words_;
};

struct SetStats {
  std::int64_t min = 0;
  std::int64_t max = 0;
  std::int64_t diam = 0;
  std::int64_t gcd_star = 1;
  std::int64_t n_a = 0;
  std::size_t cardinality = 0;
};

/// {x + y : x in a, y in b}, by word-level shift-or.
IntSet sumset(const IntSet& a, const IntSet& b);
IntSet k_fold_sum(const IntSet& a, int k);
/// gcd_star is gcd(a - min a), taken as 1 for singletons.
SetStats stats(const IntSet& a);
/// (a - min a) / gcd_star.
IntSet normalize(const IntSet& a);

}  // namespace lstab
