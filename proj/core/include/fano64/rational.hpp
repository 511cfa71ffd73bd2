#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fano64 {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Integer value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t value) : Rational(Integer(value)) {}  // NOLINT
  Rational(int value) : Rational(Integer(value)) {}           // NOLINT
  /// Throws UsageError when `den` is zero.
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  /// Throws DomainError when the value is not an integer.
  Integer to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when the value is integral.
  std::string str() const;

  /// Accepts "p", "-p" and "p/q". Throws UsageError on malformed text.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floor and ceiling of an exact rational.
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

/// Parses a decimal integer with optional sign. Throws UsageError.
Integer parse_integer(std::string_view text);

}  // namespace fano64
