#include "cmcflat/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "cmcflat/errors.hpp"

namespace cmcflat {

namespace {

constexpr Scalar kDetFloor = 1e-12;

AmbientVector normal_part(const AmbientVector& v, const AmbientVector& psi, const AmbientVector& px,
                          const AmbientVector& py, const Eigen::Matrix2d& g_inv) {
  AmbientVector out = v - v.dot(psi) * psi;
  const Eigen::Vector2d c = g_inv * Eigen::Vector2d(v.dot(px), v.dot(py));
  out -= c.x() * px + c.y() * py;
  return out;
}

AmbientVector sphere_projection(const AmbientVector& w, const AmbientVector& psi) { return w - w.dot(psi) * psi; }

// Central-difference weights of accuracy order 4 for derivative orders 0..4,
// indexed by offset + 3. Orders 1 and 2 use offsets -2..2, orders 3 and 4
// use -3..3.
struct Stencil {
  int half = 0;
  int den = 1;
  std::array<int, 7> num{};
};

const std::array<Stencil, 5>& stencils() {
  static const std::array<Stencil, 5> table{
      Stencil{0, 1, {0, 0, 0, 1, 0, 0, 0}},
      Stencil{2, 12, {0, 1, -8, 0, 8, -1, 0}},
      Stencil{2, 12, {0, -1, 16, -30, 16, -1, 0}},
      Stencil{3, 8, {1, -8, 13, 0, -13, 8, -1}},
      Stencil{3, 6, {-1, 12, -39, 56, -39, 12, -1}},
  };
  return table;
}

}  // namespace

FundamentalForms fundamental_forms(const SurfaceMap& surface, const EvalPoint& p) {
  FundamentalForms f;
  f.psi = surface.partial(p, 0, 0);
  f.psi_x = surface.partial(p, 1, 0);
  f.psi_y = surface.partial(p, 0, 1);
  f.g << f.psi_x.dot(f.psi_x), f.psi_x.dot(f.psi_y), f.psi_y.dot(f.psi_x), f.psi_y.dot(f.psi_y);
  const Scalar det = f.g.determinant();
  if (!(det >= kDetFloor)) throw DegenerateError("degenerate first fundamental form (det g = " + std::to_string(det) + ")");
  const Eigen::Matrix2d g_inv = f.g.inverse();
  f.b_xx = normal_part(surface.partial(p, 2, 0), f.psi, f.psi_x, f.psi_y, g_inv);
  f.b_xy = normal_part(surface.partial(p, 1, 1), f.psi, f.psi_x, f.psi_y, g_inv);
  f.b_yy = normal_part(surface.partial(p, 0, 2), f.psi, f.psi_x, f.psi_y, g_inv);
  return f;
}

CurvatureSummary mean_curvature(const SurfaceMap& surface, const EvalPoint& p) {
  const FundamentalForms f = fundamental_forms(surface, p);
  const Scalar e = f.g(0, 0);
  const Scalar fm = f.g(0, 1);
  const Scalar gg = f.g(1, 1);
  const Scalar det = e * gg - fm * fm;

  CurvatureSummary out;
  out.h_vector = (gg * f.b_xx - 2.0 * fm * f.b_xy + e * f.b_yy) / (2.0 * det);
  out.mean_curvature_norm = out.h_vector.norm();
  out.gaussian = 1.0 + (f.b_xx.dot(f.b_yy) - f.b_xy.squaredNorm()) / det;

  const Scalar h2 = out.h_vector.squaredNorm();
  out.pseudo_umbilical_residual = std::max({std::abs(f.b_xx.dot(out.h_vector) - h2 * e),
                                            std::abs(f.b_xy.dot(out.h_vector) - h2 * fm),
                                            std::abs(f.b_yy.dot(out.h_vector) - h2 * gg)});
  return out;
}

namespace {

// Inverse of the induced metric from first partials.
Eigen::Matrix2d inverse_metric(const AmbientVector& px, const AmbientVector& py) {
  Eigen::Matrix2d g;
  g << px.squaredNorm(), px.dot(py), px.dot(py), py.squaredNorm();
  if (g.determinant() < 1e-12) throw DegenerateError("induced metric is degenerate (det g < 1e-12)");
  return g.inverse();
}

}  // namespace

AmbientVector tension(const SurfaceMap& surface, const EvalPoint& p) {
  const Eigen::Matrix2d gi = inverse_metric(surface.partial(p, 1, 0), surface.partial(p, 0, 1));
  // g^{ab} g_ab = 2, so the sphere term is 2 psi for any metric.
  return gi(0, 0) * surface.partial(p, 2, 0) + 2.0 * gi(0, 1) * surface.partial(p, 1, 1) +
         gi(1, 1) * surface.partial(p, 0, 2) + 2.0 * surface.partial(p, 0, 0);
}

DerivativeJet::DerivativeJet(std::size_t dim) : table_(25, AmbientVector::Zero(static_cast<Eigen::Index>(dim))) {}

AmbientVector bitension_from_jet(const DerivativeJet& d) {
  const AmbientVector& psi = d.at(0, 0);
  const std::array<AmbientVector, 2> dpsi{d.at(1, 0), d.at(0, 1)};
  const Eigen::Matrix2d gi = inverse_metric(dpsi[0], dpsi[1]);

  // Derivative (a, b) of tau = g^{cd} psi_cd + 2 psi, with g frozen.
  const auto tau_d = [&](int a, int b) -> AmbientVector {
    return gi(0, 0) * d.at(a + 2, b) + 2.0 * gi(0, 1) * d.at(a + 1, b + 1) + gi(1, 1) * d.at(a, b + 2) +
           2.0 * d.at(a, b);
  };
  const AmbientVector tau = tau_d(0, 0);
  const std::array<AmbientVector, 2> first{tau_d(1, 0), tau_d(0, 1)};
  const auto unit = [](int i) { return std::array<int, 2>{i == 0 ? 1 : 0, i == 1 ? 1 : 0}; };

  AmbientVector rough = AmbientVector::Zero(psi.size());
  AmbientVector curvature = -2.0 * tau;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Scalar w = gi(i, j);
      if (w == 0.0) continue;
      const auto ei = unit(i), ej = unit(j);
      // d_j of V_i = P(d_i tau) = d_i tau - <d_i tau, psi> psi.
      const AmbientVector& ti = first[i];
      const AmbientVector tij = tau_d(ei[0] + ej[0], ei[1] + ej[1]);
      const Scalar c = ti.dot(psi);
      const Scalar dc = tij.dot(psi) + ti.dot(dpsi[j]);
      rough += w * sphere_projection(tij - dc * psi - c * dpsi[j], psi);
      curvature += w * tau.dot(dpsi[j]) * dpsi[i];
    }
  // tau_2 = -Delta tau - tr R(d phi, tau) d phi with -Delta = g^{ij} nabla_i nabla_j.
  return rough - curvature;
}

AmbientVector bitension(const SurfaceMap& surface, const EvalPoint& p) {
  DerivativeJet jet(surface.ambient_dim());
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) jet.at(a, b) = surface.partial(p, a, b);
  return bitension_from_jet(jet);
}

DerivativeJet fd_jet(const SurfaceMap& surface, const EvalPoint& p, Scalar step) {
  if (!(step >= 1e-4 && step <= 1e-1)) throw DomainError("fd step must lie in [1e-4, 1e-1]");
  const auto dim = static_cast<Eigen::Index>(surface.ambient_dim());
  const Quad hq = step;
  std::array<std::array<ExtendedVector, 7>, 7> grid;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j)
      grid[static_cast<std::size_t>(i + 3)][static_cast<std::size_t>(j + 3)] =
          surface.eval_extended(Quad(p.x) + i * hq, Quad(p.y) + j * hq);

  const auto& st = stencils();
  DerivativeJet jet(surface.ambient_dim());
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      const Stencil& sx = st[static_cast<std::size_t>(a)];
      const Stencil& sy = st[static_cast<std::size_t>(b)];
      ExtendedVector acc(static_cast<std::size_t>(dim), Quad(0));
      for (int i = -sx.half; i <= sx.half; ++i) {
        const int wx = sx.num[static_cast<std::size_t>(i + 3)];
        if (wx == 0) continue;
        for (int j = -sy.half; j <= sy.half; ++j) {
          const int wy = sy.num[static_cast<std::size_t>(j + 3)];
          if (wy == 0) continue;
          const Quad w = wx * wy;
          const ExtendedVector& v = grid[static_cast<std::size_t>(i + 3)][static_cast<std::size_t>(j + 3)];
          for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += w * v[k];
        }
      }
      Quad scale = sx.den * sy.den;
      for (int k = 0; k < a + b; ++k) scale *= hq;
      AmbientVector& out = jet.at(a, b);
      for (Eigen::Index k = 0; k < dim; ++k) out[k] = static_cast<double>(acc[static_cast<std::size_t>(k)] / scale);
    }
  }
  return jet;
}

AmbientVector fd_bitension_oracle(const SurfaceMap& surface, const EvalPoint& p, Scalar step) {
  return bitension_from_jet(fd_jet(surface, p, step));
}

FdConvergence fd_bitension_convergence(const SurfaceMap& surface, const EvalPoint& p,
                                       std::span<const Scalar> steps) {
  FdConvergence out;
  const AmbientVector exact = bitension(surface, p);
  for (Scalar h : steps) {
    out.steps.push_back(h);
    out.discrepancies.push_back((fd_bitension_oracle(surface, p, h) - exact).norm());
    out.max_constant = std::max(out.max_constant, out.discrepancies.back() / std::pow(h, 4));
  }
  for (std::size_t i = 0; i + 1 < out.steps.size(); ++i)
    out.pairwise_orders.push_back(std::log(out.discrepancies[i] / out.discrepancies[i + 1]) /
                                  std::log(out.steps[i] / out.steps[i + 1]));
  if (out.steps.size() >= 2) {
    Scalar sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<Scalar>(out.steps.size());
    for (std::size_t i = 0; i < out.steps.size(); ++i) {
      const Scalar x = std::log(out.steps[i]);
      const Scalar y = std::log(out.discrepancies[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    out.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.fitted_constant = std::exp((sy - out.fitted_order * sx) / n);
  }
  return out;
}

VerificationReport verify_immersion(const Immersion& im, const VerifyOptions& options) {
  VerificationReport report = validate_miyata(im.data());
  report.set_sample_count(options.samples);

  const Scalar h = im.data().h;
  const Scalar l1 = lambda1_of(h);
  const Scalar l2 = lambda2_of(h);
  const Scalar inv_sqrt2 = 1.0 / std::sqrt(2.0);

  Scalar unit = 0, metric = 0, hnorm = 0, gauss = 0, normal = 0, eig1 = 0, eig2 = 0, orth = 0, snorm = 0,
         hident = 0, tens = 0, bit = 0;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<Scalar> coord(-options.half_width, options.half_width);
  const auto cut = static_cast<Eigen::Index>(2 * im.mu_planes());
  Scalar degenerate = 0.0;
  for (std::size_t n = 0; n < options.samples; ++n) {
    const EvalPoint p{coord(rng), coord(rng)};
    FundamentalForms f;
    try {
      f = fundamental_forms(im, p);
    } catch (const DegenerateError&) {
      degenerate = std::numeric_limits<Scalar>::infinity();
      continue;
    }
    const CurvatureSummary c = mean_curvature(im, p);

    unit = std::max(unit, std::abs(f.psi.norm() - 1.0));
    metric = std::max(metric, (f.g - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff());
    hnorm = std::max(hnorm, std::abs(c.mean_curvature_norm - h));
    gauss = std::max(gauss, std::abs(c.gaussian));
    for (const AmbientVector* b : {&f.b_xx, &f.b_xy, &f.b_yy})
      normal = std::max({normal, std::abs(b->dot(f.psi_x)), std::abs(b->dot(f.psi_y)), std::abs(b->dot(f.psi))});

    const auto [t1, t2] = im.spectral_split(p);
    const AmbientVector lap = -(im.partial(p, 2, 0) + im.partial(p, 0, 2));
    AmbientVector lap1 = AmbientVector::Zero(lap.size());
    AmbientVector lap2 = AmbientVector::Zero(lap.size());
    lap1.head(cut) = lap.head(cut);
    lap2.tail(lap.size() - cut) = lap.tail(lap.size() - cut);
    eig1 = std::max(eig1, (lap1 - l1 * t1).norm());
    eig2 = std::max(eig2, (lap2 - l2 * t2).norm());
    orth = std::max(orth, std::abs(t1.dot(t2)));
    snorm = std::max({snorm, std::abs(t1.norm() - inv_sqrt2), std::abs(t2.norm() - inv_sqrt2)});
    hident = std::max(hident, (c.h_vector - h * (t1 - t2)).norm());

    const AmbientVector tau = tension(im, p);
    tens = std::max(tens, (tau - 2.0 * c.h_vector).norm());
    bit = std::max(bit, bitension(im, p).norm());
  }

  report.add("nondegenerate", degenerate, 0.0);
  report.add("unit_sphere", unit, 1e-12);
  report.add("metric_identity", metric, 1e-10);
  report.add("mean_curvature_h", hnorm, 1e-9);
  report.add("gaussian_zero", gauss, 1e-8);
  report.add("normality", normal, 1e-9);
  report.add("eigen_t1", eig1, 1e-10);
  report.add("eigen_t2", eig2, 1e-10);
  report.add("spectral_orthogonal", orth, 1e-10);
  report.add("spectral_norm", snorm, 1e-10);
  report.add("mean_curvature_spectral", hident, 1e-9);
  report.add("tension_2H", tens, 1e-10);
  report.add("bitension", bit, 1e-7);
  return report;
}

DiagonalSumResult diagonal_sum_check(Scalar r1, int m) {
  if (m < 1) throw DomainError("diagonal_sum_check requires m >= 1");
  if (!(r1 > 1.0 / std::sqrt(2.0))) throw DomainError("r1 must exceed 1/sqrt(2) so that 1/r1^2 + 1/r2^2 = 2 has r2 > 0");
  if (std::abs(r1 - 1.0) < 1e-12) throw DomainError("r1 = r2 = 1 is the harmonic case (needs r1 != r2)");

  DiagonalSumResult out;
  out.r1 = r1;
  const Scalar inv1 = 1.0 / (r1 * r1);
  const Scalar inv2 = 2.0 - inv1;
  out.r2 = 1.0 / std::sqrt(inv2);
  out.alpha_sq = inv1 / 2.0;
  out.beta_sq = inv2 / 2.0;

  const Scalar a = 1.0 - inv1;
  const Scalar b = 1.0 - inv2;
  const Scalar mm = static_cast<Scalar>(m) * m;
  const Scalar alpha = std::sqrt(out.alpha_sq);
  const Scalar beta = std::sqrt(out.beta_sq);
  // tau = m (alpha a phi_1, beta b phi_2)
  // tau_2 = m^2 (alpha^2 a + beta^2 b) (alpha phi_1, beta phi_2) + m^2 (alpha a^2 phi_1, beta b^2 phi_2)
  const Scalar mixed = out.alpha_sq * a + out.beta_sq * b;
  out.tau_coefficients = Eigen::Vector2d(m * alpha * a, m * beta * b);
  out.tau2_coefficients = Eigen::Vector2d(mm * (mixed * alpha + alpha * a * a), mm * (mixed * beta + beta * b * b));

  out.h_norm_sq = 1.0 - 1.0 / (r1 * r1 * out.r2 * out.r2);
  out.h_norm_sq_shape = out.alpha_sq * inv1 + out.beta_sq * inv2 - 1.0;

  out.report.add("riemannian_alpha_beta", std::abs(out.alpha_sq + out.beta_sq - 1.0), 1e-12);
  out.report.add("sphere_radius", std::abs(out.alpha_sq * r1 * r1 + out.beta_sq * out.r2 * out.r2 - 1.0), 1e-12);
  out.report.add("tau2_vanishes", out.tau2_coefficients.cwiseAbs().maxCoeff(), 1e-12);
  out.report.add("mean_curvature_forms_agree", std::abs(out.h_norm_sq - out.h_norm_sq_shape), 1e-12);
  return out;
}

BoruvkaParams boruvka_params(int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw DomainError("Boruvka degrees must satisfy n >= 2");
  if (n1 == n2) throw DegenerateError("n1 = n2 gives a minimal, not proper-biharmonic, diagonal sum");
  BoruvkaParams out;
  out.q1 = BigInt(n1) * (n1 + 1);
  out.q2 = BigInt(n2) * (n2 + 1);
  const BigInt total = out.q1 + out.q2;
  out.alpha_sq = Rational(out.q1, total);
  out.beta_sq = Rational(out.q2, total);
  out.r1_sq = Rational(total, 2 * out.q1);
  out.r2_sq = Rational(total, 2 * out.q2);
  out.r_sq = Rational(total, 4);
  const BigInt diff = out.q1 > out.q2 ? BigInt(out.q1 - out.q2) : BigInt(out.q2 - out.q1);
  out.h_norm = Rational(diff, total);
  out.r1 = std::sqrt(out.r1_sq.to_double());
  out.r2 = std::sqrt(out.r2_sq.to_double());
  out.r = std::sqrt(out.r_sq.to_double());
  return out;
}

}  // namespace cmcflat
