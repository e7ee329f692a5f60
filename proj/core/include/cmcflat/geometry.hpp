#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "cmcflat/immersion.hpp"
#include "cmcflat/rational.hpp"
#include "cmcflat/report.hpp"
#include "cmcflat/surface.hpp"

namespace cmcflat {

/// First fundamental form g and the second fundamental form of the surface in
/// S^n, written as ambient vectors normal to both psi and d psi.
struct FundamentalForms {
  Eigen::Matrix2d g;
  AmbientVector b_xx;
  AmbientVector b_xy;
  AmbientVector b_yy;
  AmbientVector psi;
  AmbientVector psi_x;
  AmbientVector psi_y;
};

struct CurvatureSummary {
  Scalar mean_curvature_norm = 0.0;
  Scalar gaussian = 0.0;
  // max_ab |<B_ab, H> - |H|^2 g_ab|; zero iff A_H = |H|^2 Id.
  Scalar pseudo_umbilical_residual = 0.0;
  AmbientVector h_vector;
};

/// Throws DegenerateError when det g < 1e-12.
FundamentalForms fundamental_forms(const SurfaceMap& surface, const EvalPoint& p);

/// H = (1/2) g^{ab} B_ab; Gaussian curvature from the Gauss equation in the
/// unit sphere, K = 1 + (<B_xx, B_yy> - |B_xy|^2) / det g.
CurvatureSummary mean_curvature(const SurfaceMap& surface, const EvalPoint& p);

/// Tension field g^{ab} psi_ab + 2 psi for the induced metric g, assumed to
/// have constant coefficients in the chart.
AmbientVector tension(const SurfaceMap& surface, const EvalPoint& p);

/// Partials D(a, b) = d^{a+b} psi / dx^a dy^b for a + b <= 4.
class DerivativeJet {
 public:
  explicit DerivativeJet(std::size_t dim);
  AmbientVector& at(int a, int b) { return table_[index(a, b)]; }
  const AmbientVector& at(int a, int b) const { return table_[index(a, b)]; }

 private:
  static std::size_t index(int a, int b) { return static_cast<std::size_t>(a * 5 + b); }
  std::vector<AmbientVector> table_;
};

/// Bitension field tau_2 = -Delta tau - tr R(d phi, tau) d phi of the
/// immersion with its induced metric, assembled from a derivative jet. The
/// metric is taken from the first partials at the point and treated as
/// constant, which is exact for every plane-wave immersion.
///
/// The pull-back connection is the sphere's Levi-Civita connection, realised
/// as the ambient derivative followed by the projection w - <w, psi> psi.
/// Delta is the rough Laplacian with the geometer's sign (-trace of the
/// second covariant derivative) and R(X,Y)Z = <Y,Z>X - <X,Z>Y, so for a
/// normal tau the curvature term contributes +2 tau.
AmbientVector bitension_from_jet(const DerivativeJet& jet);

/// Analytic bitension (exact derivatives up to order 4).
AmbientVector bitension(const SurfaceMap& surface, const EvalPoint& p);

/// Independent oracle: the same field with every derivative replaced by a
/// fourth-order central difference of eval() on a 7x7 stencil.
/// step must lie in [1e-4, 1e-1].
AmbientVector fd_bitension_oracle(const SurfaceMap& surface, const EvalPoint& p, Scalar step);

/// Derivative jet from fourth-order central differences of eval().
DerivativeJet fd_jet(const SurfaceMap& surface, const EvalPoint& p, Scalar step);

struct FdConvergence {
  std::vector<Scalar> steps;
  std::vector<Scalar> discrepancies;  // |oracle - analytic| per step
  std::vector<Scalar> pairwise_orders;
  Scalar fitted_order = 0.0;     // least-squares slope of log(disc) vs log(step)
  Scalar fitted_constant = 0.0;  // C in disc ~ C step^order
  Scalar max_constant = 0.0;     // max disc / step^4
};

FdConvergence fd_bitension_convergence(const SurfaceMap& surface, const EvalPoint& p,
                                       std::span<const Scalar> steps);

struct VerifyOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  Scalar half_width = 10.0;  // points are drawn from [-w, w]^2
};

/// Full invariant suite on random sample points: unit sphere, identity
/// metric, |H| = h, K = 0, normality, spectral eigen-blocks, tau = 2H and
/// tau_2 = 0, together with the MiyataData conditions.
VerificationReport verify_immersion(const Immersion& im, const VerifyOptions& options = {});

/// Closed-form check of a diagonal sum (alpha phi_1, beta phi_2) of two
/// minimal immersions into spheres of radii r1, r2 (1/r1^2 + 1/r2^2 = 2).
struct DiagonalSumResult {
  Scalar r1 = 0.0;
  Scalar r2 = 0.0;
  Scalar alpha_sq = 0.0;
  Scalar beta_sq = 0.0;
  Scalar h_norm_sq = 0.0;             // 1 - 1/(r1^2 r2^2)
  Scalar h_norm_sq_shape = 0.0;       // alpha^2/r1^2 + beta^2/r2^2 - 1
  Eigen::Vector2d tau2_coefficients;  // coefficients of (phi_1, phi_2) in tau_2
  Eigen::Vector2d tau_coefficients;   // coefficients of (phi_1, phi_2) in tau
  VerificationReport report;
};

DiagonalSumResult diagonal_sum_check(Scalar r1, int m);

/// Parameters of the diagonal sum of two Boruvka spheres of degrees n1 != n2.
struct BoruvkaParams {
  BigInt q1;
  BigInt q2;
  Rational alpha_sq;
  Rational beta_sq;
  Rational r1_sq;
  Rational r2_sq;
  Rational r_sq;
  Rational h_norm;  // |H| = |q1 - q2| / (q1 + q2)
  Scalar r1 = 0.0;
  Scalar r2 = 0.0;
  Scalar r = 0.0;
};

BoruvkaParams boruvka_params(int n1, int n2);

}  // namespace cmcflat
