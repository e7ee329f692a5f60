#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace cmcflat {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so structural
/// equality coincides with numeric equality.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "num/den" or an integer literal. Decimal points and exponents are
  /// rejected so that no silent rounding can enter an exact computation.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  double to_double() const;
  /// Always "num/den", including integers ("3/1").
  std::string str() const;

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  Rational operator-() const { return Rational(Raw{-value_}); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Raw{a.value_ + b.value_}); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Raw{a.value_ - b.value_}); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Raw{a.value_ * b.value_}); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Value = boost::multiprecision::cpp_rational;
  struct Raw {
    Value v;
  };
  explicit Rational(Raw raw) : value_(std::move(raw.v)) {}

  Value value_{0};
};

/// Floor of the square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);

/// Exact square root of a nonnegative rational, if it is itself rational.
std::optional<Rational> rational_sqrt_exact(const Rational& q);

Rational abs(const Rational& q);

}  // namespace cmcflat
