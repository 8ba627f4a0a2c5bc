#include "lstab/set_literal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lstab {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string text) : text_(std::move(text)) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (peek() == '-') advance();
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    std::int64_t value = 0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw Error("set literal: expected integer at offset " + std::to_string(start) + " in \"" +
                  text_ + "\"");
    }
    return value;
  }

  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view literal) {
  std::string compact;
  for (char c : literal) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::vector<std::int64_t> out;
  if (compact.empty()) return out;

  Cursor cur(std::move(compact));
  while (true) {
    const std::int64_t lo = cur.integer();
    std::int64_t hi = lo;
    if (cur.peek() == '-') {
      cur.advance();
      hi = cur.integer();
      if (hi < lo) {
        throw Error("set literal: descending range " + std::to_string(lo) + "-" + std::to_string(hi));
      }
    }
    if (static_cast<std::uint64_t>(hi - lo) > capacity()) {
      throw Error("set literal: range wider than capacity");
    }
    for (std::int64_t x = lo; x <= hi; ++x) out.push_back(x);
    if (cur.done()) break;
    if (cur.peek() != ',') throw Error("set literal: expected ',' in \"" + cur.text() + "\"");
    cur.advance();
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntSet parse_set_literal(std::string_view literal) {
  const auto values = parse_int_list(literal);
  return IntSet::from_elements(values);
}

std::string format_set_literal(const IntSet& set, std::int64_t offset) {
  std::string out;
  const auto elems = set.elements();
  for (std::size_t i = 0; i < elems.size();) {
    std::size_t j = i;
    while (j + 1 < elems.size() && elems[j + 1] == elems[j] + 1) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(elems[i] + offset);
    if (j > i) out += '-' + std::to_string(elems[j] + offset);
    i = j + 1;
  }
  return out;
}

}  // namespace lstab
