#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cmcflat/rational.hpp"
#include "cmcflat/types.hpp"

namespace cmcflat {

/// Symmetric 2x2 Gram matrix [[g11, g12], [g12, g22]] in units of pi^2, so
/// the actual inner products are pi^2 times these rationals.
struct ExactGram {
  Rational g11;
  Rational g12;
  Rational g22;

  Rational det() const { return g11 * g22 - g12 * g12; }
  friend bool operator==(const ExactGram&, const ExactGram&) = default;
};

/// Integer change of basis [[a, b], [c, d]]: new_1 = a e_1 + b e_2,
/// new_2 = c e_1 + d e_2.
using IntMatrix2 = std::array<std::array<long long, 2>, 2>;

ExactGram transform(const ExactGram& g, const IntMatrix2& u);

/// Discrete subgroup of R^2 of rank 0, 1 or 2.
class Lattice2 {
 public:
  Lattice2() = default;

  /// Rank-1 lattice; the generator is normalised to point into the upper half
  /// plane x > 0 (or along +y).
  static Lattice2 line(const Vec2& gen, std::optional<Rational> norm_sq_pi2 = std::nullopt);

  /// Rank-2 lattice with a Lagrange-Gauss reduced basis. Throws DegenerateError
  /// when the generators are dependent (|det| <= 1e-12).
  static Lattice2 from_basis(const Vec2& g1, const Vec2& g2, std::optional<ExactGram> gram = std::nullopt);

  int rank() const { return static_cast<int>(gens_.size()); }
  const std::vector<Vec2>& gens() const { return gens_; }
  const std::optional<ExactGram>& exact_gram() const { return exact_gram_; }

  Eigen::Matrix2d float_gram() const;

  /// True when z = a g1 + b g2 with a, b within tol of integers.
  bool contains(const Vec2& z, Scalar tol = 1e-9) const;

 private:
  std::vector<Vec2> gens_;
  std::optional<ExactGram> exact_gram_;
};

/// Lagrange-Gauss reduction in place; returns the unimodular matrix applied.
IntMatrix2 gauss_reduce(Vec2& g1, Vec2& g2);

/// Same subgroup of R^2: each basis lies in the other's span over Z.
bool same_subgroup(const Lattice2& a, const Lattice2& b, Scalar tol = 1e-9);

}  // namespace cmcflat
