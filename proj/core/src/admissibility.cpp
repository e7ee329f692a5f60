#include "cmcflat/admissibility.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "cmcflat/errors.hpp"

namespace cmcflat {

namespace {

Rational q_form(const ExactGram& g, long long a, long long b) {
  const Rational ra(a), rb(b);
  return ra * ra * g.g11 + Rational(2) * ra * rb * g.g12 + rb * rb * g.g22;
}

std::vector<planar::Point> negated(const std::vector<planar::Point>& pts) {
  std::vector<planar::Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(-p);
  return out;
}

const planar::Point kOrigin{Rational(0), Rational(0)};

}  // namespace

DualLattice dual_lattice(const Lattice2& lat) {
  if (lat.rank() != 2) throw DomainError("dual_lattice needs a rank-2 lattice (got rank " + std::to_string(lat.rank()) + ")");
  if (!lat.exact_gram()) throw ExactnessError("dual_lattice needs exact Gram data for the primal lattice");
  const ExactGram& g = *lat.exact_gram();
  const Rational det = g.det();
  if (det.sign() <= 0) throw DegenerateError("primal Gram matrix is not positive definite");

  Eigen::Matrix2d m;
  m.col(0) = lat.gens()[0];
  m.col(1) = lat.gens()[1];
  const Eigen::Matrix2d w = 2.0 * kPi * m.inverse().transpose();

  DualLattice out;
  out.gens = {Vec2(w.col(0)), Vec2(w.col(1))};
  const Rational k = Rational(4) / det;
  out.exact_gram = ExactGram{k * g.g22, -k * g.g12, k * g.g11};
  return out;
}

CircleSquareSet circle_points(const DualLattice& dual, const Rational& radius_sq) {
  if (radius_sq.sign() <= 0) throw DomainError("radius_sq must be positive");
  const ExactGram& g = dual.exact_gram;
  const Rational det = g.det();
  const double r = radius_sq.to_double();
  const double dd = det.to_double();
  const auto bound_a = static_cast<long long>(std::floor(std::sqrt(r * g.g22.to_double() / dd))) + 1;
  const auto bound_b = static_cast<long long>(std::floor(std::sqrt(r * g.g11.to_double() / dd))) + 1;
  if (static_cast<double>(2 * bound_a + 1) * static_cast<double>(2 * bound_b + 1) > static_cast<double>(kCircleEnumerationCap))
    throw UnsupportedError("circle enumeration exceeds the search cap");

  CircleSquareSet out;
  out.radius_sq = radius_sq;
  for (long long a = -bound_a; a <= bound_a; ++a) {
    for (long long b = -bound_b; b <= bound_b; ++b) {
      // One of each +-w pair: a > 0, or a = 0 and b > 0.
      if (!(a > 0 || (a == 0 && b > 0))) continue;
      if (q_form(g, a, b) != radius_sq) continue;
      const Vec2 w = static_cast<Scalar>(a) * dual.gens[0] + static_cast<Scalar>(b) * dual.gens[1];
      const Complex wc(w.x(), w.y());
      out.preimages.emplace_back(a, b);
      out.dual_vectors.push_back(w);
      out.points.push_back(wc * wc);
      // Frame with g1* on the real axis: w = (u, v sqrt(det)) / sqrt(g11) with
      // u = a g11 + b g12, v = b. Then w^2 = (u^2 - v^2 det, 2 u v sqrt(det)) / g11;
      // dividing the imaginary part by sqrt(det) leaves rationals.
      const Rational u = Rational(a) * g.g11 + Rational(b) * g.g12;
      const Rational v(b);
      out.exact.push_back({(u * u - v * v * det) / g.g11, Rational(2) * u * v / g.g11});
    }
  }
  return out;
}

std::optional<Witness> witness_weights(const CircleSquareSet& a, const CircleSquareSet& g) {
  if (a.exact.empty() || g.exact.empty()) return std::nullopt;
  const auto hull_a = planar::convex_hull(a.exact);
  const auto neg_g = negated(g.exact);
  const auto hull_ng = planar::convex_hull(neg_g);

  std::optional<planar::Point> target;
  if (planar::hull_contains(hull_a, kOrigin) && planar::hull_contains(hull_ng, kOrigin))
    target = kOrigin;
  else
    target = planar::hull_intersection(hull_a, hull_ng);
  if (!target) return std::nullopt;

  const auto ca = planar::positive_combination(a.exact, *target);
  const auto cg = planar::positive_combination(neg_g, *target);
  if (!ca || !cg) return std::nullopt;
  return Witness{ca->indices, cg->indices, ca->weights, cg->weights};
}

MiyataData witness_data(const Rational& h, const CircleSquareSet& a, const CircleSquareSet& g, const Witness& w) {
  const Complex i(0.0, 1.0);
  const auto frequency = [&](const Vec2& v) {
    const Complex z = i * std::conj(Complex(v.x(), v.y()));
    return z / std::abs(z);
  };
  MiyataData d;
  d.h = h.to_double();
  for (std::size_t k = 0; k < w.alpha_indices.size(); ++k) {
    d.mu.push_back(frequency(a.dual_vectors[w.alpha_indices[k]]));
    d.r_weights.push_back(w.r_weights[k].to_double());
  }
  for (std::size_t k = 0; k < w.gamma_indices.size(); ++k) {
    d.eta.push_back(frequency(g.dual_vectors[w.gamma_indices[k]]));
    d.rp_weights.push_back(w.rp_weights[k].to_double());
  }
  return d;
}

const char* to_string(AdmissibleVerdict v) {
  switch (v) {
    case AdmissibleVerdict::exists_pseudo_umbilical: return "exists_pseudo_umbilical";
    case AdmissibleVerdict::exists: return "exists";
    case AdmissibleVerdict::none_empty_circle: return "none_empty_circle";
    case AdmissibleVerdict::none_hull: return "none_hull";
    case AdmissibleVerdict::none: return "none";
    default: return "undecided";
  }
}

AdmissibilityResult admissible(const Lattice2& lat, const Rational& h) {
  if (!(h > Rational(0) && h < Rational(1))) throw DomainError("h = " + h.str() + " violates 0 < h < 1");
  AdmissibilityResult out;
  out.h = h;
  const DualLattice dual = dual_lattice(lat);
  const Rational one(1);
  try {
    out.alpha = circle_points(dual, Rational(2) * (one - h));
    out.gamma = circle_points(dual, Rational(2) * (one + h));
  } catch (const UnsupportedError& e) {
    out.verdict = AdmissibleVerdict::undecided;
    out.note = e.what();
    return out;
  }

  if (out.alpha.points.empty() || out.gamma.points.empty()) {
    out.verdict = AdmissibleVerdict::none_empty_circle;
    return out;
  }
  const auto hull_a = planar::convex_hull(out.alpha.exact);
  const auto hull_g = planar::convex_hull(out.gamma.exact);
  const bool zero_a = planar::hull_contains(hull_a, kOrigin);
  const bool zero_g = planar::hull_contains(hull_g, kOrigin);

  std::vector<planar::Point> both = out.alpha.exact;
  both.insert(both.end(), out.gamma.exact.begin(), out.gamma.exact.end());
  if (zero_a && zero_g) {
    out.verdict = AdmissibleVerdict::exists_pseudo_umbilical;
  } else if (!planar::hull_contains(planar::convex_hull(both), kOrigin)) {
    out.verdict = AdmissibleVerdict::none_hull;
    return out;
  }

  out.witness = witness_weights(out.alpha, out.gamma);
  if (!out.witness) {
    out.verdict = AdmissibleVerdict::none;
    return out;
  }
  if (out.verdict != AdmissibleVerdict::exists_pseudo_umbilical) out.verdict = AdmissibleVerdict::exists;
  out.data = witness_data(h, out.alpha, out.gamma, *out.witness);
  return out;
}

}  // namespace cmcflat
