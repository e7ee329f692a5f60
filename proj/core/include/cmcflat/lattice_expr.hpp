#pragma once

#include <map>
#include <string_view>
#include <utility>

#include "cmcflat/lattice.hpp"

namespace cmcflat {

/// Finite sum of monomials c * pi^k * sqrt(f) with rational c and squarefree f.
class SurdSum {
 public:
  using Key = std::pair<int, long long>;  // (power of pi, squarefree radicand)

  SurdSum() = default;
  static SurdSum constant(const Rational& c);
  static SurdSum pi();
  static SurdSum sqrt(long long n);
  /// c * pi^pi_power * sqrt(radicand), radicand > 0.
  static SurdSum monomial(int pi_power, long long radicand, const Rational& c);

  const std::map<Key, Rational>& terms() const { return terms_; }
  double value() const;

  /// Coefficient of pi^2 if that is the only monomial; ExactnessError otherwise.
  Rational pi_squared_multiple() const;

  friend SurdSum operator+(const SurdSum& a, const SurdSum& b);
  friend SurdSum operator-(const SurdSum& a, const SurdSum& b);
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);

 private:
  void add(const Key& key, const Rational& c);
  std::map<Key, Rational> terms_;
};

/// Parses one coordinate expression, e.g. "2*pi", "-pi*sqrt(5)/3", "pi + 2*pi".
///
///   expr   := term (('+' | '-') term)*
///   term   := ['+' | '-'] factor (('*' | '/') factor)*
///   factor := integer | 'pi' | 'sqrt(' integer ')'
SurdSum parse_surd(std::string_view text);

/// Lattice from {"gens": [["x1", "y1"], ["x2", "y2"]]}; the Gram entries must
/// be rational multiples of pi^2.
Lattice2 parse_lattice_json(std::string_view json_text);

}  // namespace cmcflat
