#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace thf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact membership degree in [0,1], always held in lowest terms.
class Rational {
public:
  Rational() = default;

  /// Throws DegreeOutOfRange unless 0 <= num/den <= 1, SyntaxError if den == 0.
  Rational(const BigInt& num, const BigInt& den = 1);

  static Rational zero() { return Rational{}; }
  static Rational one() { return Rational{1}; }

  /// Accepts "p/q" or a decimal literal with at most 18 fractional digits.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  /// "0", "1", or reduced "p/q".
  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  boost::multiprecision::cpp_rational value_{0};
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace thf
