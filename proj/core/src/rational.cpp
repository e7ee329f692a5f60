#include "cmcflat/rational.hpp"

#include <cctype>

#include "cmcflat/errors.hpp"

namespace cmcflat {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("empty integer in rational literal '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (digits[0] == '+' || digits[0] == '-') {
    negative = digits[0] == '-';
    i = 1;
  }
  if (i == digits.size()) throw ParseError("missing digits in rational literal '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < digits.size(); ++i) {
    const char c = digits[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      if (c == '.' || c == 'e' || c == 'E')
        throw ParseError("decimal input '" + std::string(whole) + "' refused on an exact path; use num/den");
      throw ParseError("invalid character in rational literal '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = den < 0 ? Value(-num, -den) : Value(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero rational");
  return Rational(Rational::Raw{a.value_ / b.value_});
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const BigInt num = parse_integer(trim(s.substr(0, slash)), text);
  const BigInt den = parse_integer(trim(s.substr(slash + 1)), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

std::optional<Rational> rational_sqrt_exact(const Rational& q) {
  if (q.sign() < 0) throw DomainError("rational_sqrt_exact requires q >= 0");
  // Lowest terms: q is a rational square iff numerator and denominator are
  // both perfect squares.
  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  const BigInt rn = isqrt(num);
  const BigInt rd = isqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace cmcflat
