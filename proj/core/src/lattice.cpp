#include "cmcflat/lattice.hpp"

#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "cmcflat/errors.hpp"

namespace cmcflat {

namespace {

constexpr Scalar kIndependence = 1e-12;

bool points_up(const Vec2& v) { return v.x() > 1e-12 * v.norm() || (std::abs(v.x()) <= 1e-12 * v.norm() && v.y() > 0.0); }

IntMatrix2 multiply(const IntMatrix2& a, const IntMatrix2& b) {
  IntMatrix2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return out;
}

}  // namespace

ExactGram transform(const ExactGram& g, const IntMatrix2& u) {
  const Rational a(u[0][0]), b(u[0][1]), c(u[1][0]), d(u[1][1]);
  ExactGram out;
  out.g11 = a * a * g.g11 + Rational(2) * a * b * g.g12 + b * b * g.g22;
  out.g12 = a * c * g.g11 + (a * d + b * c) * g.g12 + b * d * g.g22;
  out.g22 = c * c * g.g11 + Rational(2) * c * d * g.g12 + d * d * g.g22;
  return out;
}

IntMatrix2 gauss_reduce(Vec2& g1, Vec2& g2) {
  IntMatrix2 u{{{1, 0}, {0, 1}}};
  if (g1.squaredNorm() > g2.squaredNorm()) {
    std::swap(g1, g2);
    u = multiply(IntMatrix2{{{0, 1}, {1, 0}}}, u);
  }
  for (int guard = 0; guard < 1000; ++guard) {
    const auto k = static_cast<long long>(std::llround(g1.dot(g2) / g1.squaredNorm()));
    if (k != 0) {
      g2 -= static_cast<Scalar>(k) * g1;
      u = multiply(IntMatrix2{{{1, 0}, {-k, 1}}}, u);
    }
    if (g2.squaredNorm() >= g1.squaredNorm() * (1.0 - 1e-14)) break;
    std::swap(g1, g2);
    u = multiply(IntMatrix2{{{0, 1}, {1, 0}}}, u);
  }
  return u;
}

Lattice2 Lattice2::line(const Vec2& gen, std::optional<Rational> norm_sq_pi2) {
  if (!(gen.norm() > kIndependence)) throw DegenerateError("rank-1 lattice generator is zero");
  Lattice2 lat;
  lat.gens_.push_back(points_up(gen) ? gen : Vec2(-gen));
  if (norm_sq_pi2) lat.exact_gram_ = ExactGram{*norm_sq_pi2, Rational(0), Rational(0)};
  return lat;
}

Lattice2 Lattice2::from_basis(const Vec2& g1, const Vec2& g2, std::optional<ExactGram> gram) {
  const Scalar det = g1.x() * g2.y() - g1.y() * g2.x();
  if (!(std::abs(det) > kIndependence)) throw DegenerateError("lattice generators are linearly dependent");
  Vec2 a = g1;
  Vec2 b = g2;
  IntMatrix2 u = gauss_reduce(a, b);
  // Canonical signs: a points up, (a, b) positively oriented.
  if (!points_up(a)) {
    a = -a;
    u[0][0] = -u[0][0];
    u[0][1] = -u[0][1];
  }
  if (a.x() * b.y() - a.y() * b.x() < 0.0) {
    b = -b;
    u[1][0] = -u[1][0];
    u[1][1] = -u[1][1];
  }
  Lattice2 lat;
  lat.gens_ = {a, b};
  if (gram) lat.exact_gram_ = transform(*gram, u);
  return lat;
}

Eigen::Matrix2d Lattice2::float_gram() const {
  Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = 0; j < gens_.size(); ++j)
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = gens_[i].dot(gens_[j]);
  return g;
}

bool Lattice2::contains(const Vec2& z, Scalar tol) const {
  if (gens_.empty()) return z.norm() <= tol;
  if (gens_.size() == 1) {
    const Vec2& g = gens_[0];
    const Scalar c = z.dot(g) / g.squaredNorm();
    return std::abs(c - std::round(c)) <= tol && (z - c * g).norm() <= tol * std::max(1.0, z.norm());
  }
  Eigen::Matrix2d m;
  m.col(0) = gens_[0];
  m.col(1) = gens_[1];
  const Eigen::Vector2d c = m.partialPivLu().solve(z);
  return std::abs(c.x() - std::round(c.x())) <= tol && std::abs(c.y() - std::round(c.y())) <= tol;
}

bool same_subgroup(const Lattice2& a, const Lattice2& b, Scalar tol) {
  if (a.rank() != b.rank()) return false;
  for (const Vec2& g : a.gens())
    if (!b.contains(g, tol)) return false;
  for (const Vec2& g : b.gens())
    if (!a.contains(g, tol)) return false;
  return true;
}

}  // namespace cmcflat
