#include "lstab/rational.hpp"

#include <limits>

#include "lstab/intset.hpp"

namespace lstab {

namespace {

mpz_class from_i64(std::int64_t v) {
  // mpz_class has no portable int64 constructor; go through the string form.
  return mpz_class(std::to_string(v));
}

std::int64_t to_i64(const mpz_class& z) {
  if (z < from_i64(std::numeric_limits<std::int64_t>::min()) ||
      z > from_i64(std::numeric_limits<std::int64_t>::max())) {
    throw Error("rational: integer part does not fit in 64 bits");
  }
  return std::stoll(z.get_str());
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(from_i64(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational: zero denominator");
  value_ = mpq_class(from_i64(num), from_i64(den));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw Error("rational: cannot parse \"" + std::string(text) + "\"");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d(den);
  if (d == 0) throw Error("rational: zero denominator in \"" + std::string(text) + "\"");
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const { return value_.get_str(); }

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::int64_t Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return to_i64(q);
}

std::int64_t Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return to_i64(q);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error("rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace lstab
