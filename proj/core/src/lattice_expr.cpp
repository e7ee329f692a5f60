#include "cmcflat/lattice_expr.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "cmcflat/errors.hpp"

namespace cmcflat {

namespace {

// n = k^2 f with f squarefree; returns (k, f).
std::pair<long long, long long> split_square(long long n) {
  long long k = 1;
  long long f = 1;
  for (long long p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      k *= p;
    }
    if (n % p == 0) {
      n /= p;
      f *= p;
    }
  }
  return {k, f * n};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SurdSum parse() {
    SurdSum v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("lattice expression \"" + std::string(text_) + "\": " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  long long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer, pi or sqrt(...)");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      fail("decimal literals are not exact; write a fraction");
    if (pos_ - start > 15) fail("integer literal too long");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  // The factor itself, or its reciprocal when it follows '/'.
  SurdSum factor(bool divide) {
    if (eat_word("pi")) return divide ? SurdSum::monomial(-1, 1, Rational(1)) : SurdSum::pi();
    if (eat_word("sqrt")) {
      if (!eat('(')) fail("expected '(' after sqrt");
      const long long n = integer();
      if (!eat(')')) fail("expected ')'");
      if (n == 0) {
        if (divide) fail("division by zero");
        return SurdSum::constant(Rational(0));
      }
      if (!divide) return SurdSum::sqrt(n);
      return SurdSum::sqrt(n) * SurdSum::constant(Rational(BigInt(1), BigInt(n)));
    }
    const long long n = integer();
    if (!divide) return SurdSum::constant(Rational(n));
    if (n == 0) fail("division by zero");
    return SurdSum::constant(Rational(BigInt(1), BigInt(n)));
  }

  SurdSum term() {
    bool negative = false;
    if (eat('-'))
      negative = true;
    else
      eat('+');
    SurdSum v = factor(false);
    for (;;) {
      if (eat('*'))
        v = v * factor(false);
      else if (eat('/'))
        v = v * factor(true);
      else
        break;
    }
    return negative ? SurdSum::constant(Rational(0)) - v : v;
  }

  SurdSum expr() {
    SurdSum v = term();
    for (;;) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        v = v + term();
      } else if (pos_ < text_.size() && text_[pos_] == '-') {
        ++pos_;
        v = v - term();
      } else {
        break;
      }
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

void SurdSum::add(const Key& key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SurdSum SurdSum::constant(const Rational& c) {
  SurdSum s;
  s.add({0, 1}, c);
  return s;
}

SurdSum SurdSum::pi() {
  SurdSum s;
  s.add({1, 1}, Rational(1));
  return s;
}

SurdSum SurdSum::sqrt(long long n) {
  if (n < 0) throw DomainError("sqrt of a negative integer");
  const auto [k, f] = split_square(n);
  SurdSum s;
  s.add({0, f}, Rational(k));
  return s;
}

SurdSum SurdSum::monomial(int pi_power, long long radicand, const Rational& c) {
  if (radicand <= 0) throw DomainError("radicand must be positive");
  const auto [k, f] = split_square(radicand);
  SurdSum s;
  s.add({pi_power, f}, c * Rational(k));
  return s;
}

double SurdSum::value() const {
  double v = 0.0;
  for (const auto& [key, c] : terms_)
    v += c.to_double() * std::pow(kPi, key.first) * std::sqrt(static_cast<double>(key.second));
  return v;
}

Rational SurdSum::pi_squared_multiple() const {
  Rational out(0);
  for (const auto& [key, c] : terms_) {
    if (key != Key{2, 1}) throw ExactnessError("Gram entry is not a rational multiple of pi^2");
    out = c;
  }
  return out;
}

SurdSum operator+(const SurdSum& a, const SurdSum& b) {
  SurdSum out = a;
  for (const auto& [k, c] : b.terms_) out.add(k, c);
  return out;
}

SurdSum operator-(const SurdSum& a, const SurdSum& b) {
  SurdSum out = a;
  for (const auto& [k, c] : b.terms_) out.add(k, -c);
  return out;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const auto [g, f] = split_square(ka.second * kb.second);
      out.add({ka.first + kb.first, f}, ca * cb * Rational(g));
    }
  }
  return out;
}

SurdSum parse_surd(std::string_view text) { return Parser(text).parse(); }

Lattice2 parse_lattice_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("lattice JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("gens") || !j["gens"].is_array() || j["gens"].size() != 2)
    throw ParseError("lattice JSON needs \"gens\": [[x1, y1], [x2, y2]]");
  std::array<std::array<SurdSum, 2>, 2> g;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& row = j["gens"][i];
    if (!row.is_array() || row.size() != 2) throw ParseError("each generator needs exactly two coordinates");
    for (std::size_t k = 0; k < 2; ++k) {
      if (row[k].is_string())
        g[i][k] = parse_surd(row[k].get<std::string>());
      else if (row[k].is_number_integer())
        g[i][k] = SurdSum::constant(Rational(row[k].get<long long>()));
      else
        throw ParseError("generator coordinates must be strings or integers");
    }
  }
  const auto dot = [&](std::size_t a, std::size_t b) { return g[a][0] * g[b][0] + g[a][1] * g[b][1]; };
  const ExactGram gram{dot(0, 0).pi_squared_multiple(), dot(0, 1).pi_squared_multiple(), dot(1, 1).pi_squared_multiple()};
  const Vec2 v1(g[0][0].value(), g[0][1].value());
  const Vec2 v2(g[1][0].value(), g[1][1].value());
  if (gram.det().sign() <= 0) throw DegenerateError("lattice generators are linearly dependent");
  return Lattice2::from_basis(v1, v2, gram);
}

}  // namespace cmcflat
