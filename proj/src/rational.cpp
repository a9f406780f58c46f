#include "thf/rational.hpp"

#include <cctype>

#include "thf/errors.hpp"

namespace thf {

namespace {

constexpr std::size_t kMaxFractionDigits = 18;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view digits) {
  BigInt value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

[[noreturn]] void syntax(std::string_view text) {
  throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::SyntaxError, "zero denominator");
  value_ = boost::multiprecision::cpp_rational(num, den);
  if (value_ < 0 || value_ > 1)
    throw Error(ErrorCode::DegreeOutOfRange, "degree " + value_.str() + " is outside [0,1]");
}

Rational Rational::parse(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  BigInt num, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) syntax(text);
    num = parse_integer(p);
    den = parse_integer(q);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac) || frac.size() > kMaxFractionDigits) syntax(text);
    den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    num = parse_integer(whole) * den + parse_integer(frac);
  } else {
    if (!all_digits(body)) syntax(text);
    num = parse_integer(body);
    den = 1;
  }
  if (den == 0) syntax(text);
  if (negative && num != 0)
    throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::string(text) + " is outside [0,1]");
  return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::to_string() const {
  auto den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace thf
