#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "cmcflat/errors.hpp"
#include "cmcflat/geometry.hpp"
#include "cmcflat/immersion.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace cmcflat {
namespace {

using testing::BumpedSphere;

MiyataData s7_pseudo_umbilical(double h, double mu_angle, double eta_angle) {
  const Complex i(0, 1);
  MiyataData d;
  d.h = h;
  d.mu = {std::polar(1.0, mu_angle), i * std::polar(1.0, mu_angle)};
  d.eta = {std::polar(1.0, eta_angle), i * std::polar(1.0, eta_angle)};
  d.r_weights = {0.5, 0.5};
  d.rp_weights = {0.5, 0.5};
  return d;
}

// R'_1 raised by 0.05, then both weights rescaled to sum to one.
MiyataData broken_weights(double h, double rho) {
  MiyataData d = lift(structure_params(h, rho));
  d.rp_weights[0] += 0.05;
  for (double& w : d.rp_weights) w /= 1.05;
  return d;
}

TEST(FundamentalForms, StructureMemberIsFlatIsometric) {
  const Immersion im = from_structure(0.5, rho_max(0.5));
  const FundamentalForms f = fundamental_forms(im, {0, 0});
  EXPECT_LT((f.g - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(f.b_xx.dot(f.psi), 0.0, 1e-15);
  testing::Gen gen(1);
  for (int k = 0; k < 100; ++k) {
    const FundamentalForms g = fundamental_forms(im, gen.point());
    for (const AmbientVector* b : {&g.b_xx, &g.b_xy, &g.b_yy}) {
      EXPECT_LT(std::abs(b->dot(g.psi)), 1e-9);
      EXPECT_LT(std::abs(b->dot(g.psi_x)), 1e-9);
      EXPECT_LT(std::abs(b->dot(g.psi_y)), 1e-9);
    }
  }
}

TEST(MeanCurvature, NormEqualsHAndFlat) {
  testing::Gen gen(2);
  for (int k = 0; k < 30; ++k) {
    const double h = gen.h();
    const Immersion im = from_structure(h, gen.rho_normalized(h));
    const CurvatureSummary c = mean_curvature(im, gen.point());
    EXPECT_NEAR(c.mean_curvature_norm, h, 1e-9);
    EXPECT_NEAR(c.gaussian, 0.0, 1e-8);
  }
}

// K from the Gauss equation against the intrinsic Brioschi formula on a
// curved fixture.
TEST(MeanCurvature, GaussEquationMatchesBrioschi) {
  const BumpedSphere s(0.4, 0.15);
  testing::Gen gen(3);
  for (int k = 0; k < 40; ++k) {
    const EvalPoint p{gen.uniform(-3.0, 3.0), gen.uniform(-1.2, 1.2)};
    const double gauss = mean_curvature(s, p).gaussian;
    const double intrinsic = testing::brioschi_curvature(s, p, 2e-3);
    EXPECT_NEAR(gauss, intrinsic, 1e-6) << p.x << "," << p.y;
  }
}

TEST(MeanCurvature, UnbumpedSphereHasKnownCurvature) {
  // Radius 1/sqrt(1 + c^2) small sphere: K = 1 + c^2.
  const double c = 0.75;
  const BumpedSphere s(c, 0.0);
  EXPECT_NEAR(mean_curvature(s, {0.3, 0.2}).gaussian, 1.0 + c * c, 1e-12);
  EXPECT_NEAR(testing::brioschi_curvature(s, {0.3, 0.2}, 1e-2), 1.0 + c * c, 1e-6);
}

TEST(MeanCurvature, DegenerateMapThrows) {
  struct Constant final : SurfaceMap {
    std::size_t ambient_dim() const override { return 2; }
    int max_derivative_order() const override { return 2; }
    AmbientVector partial(const EvalPoint&, int dx, int dy) const override {
      AmbientVector v = AmbientVector::Zero(2);
      if (dx == 0 && dy == 0) v[0] = 1.0;
      return v;
    }
  };
  EXPECT_THROW(mean_curvature(Constant{}, {0, 0}), DegenerateError);
}

TEST(PseudoUmbilical, BalancedBlocksVanish) {
  testing::Gen gen(4);
  for (int k = 0; k < 20; ++k) {
    const MiyataData d = s7_pseudo_umbilical(gen.h(), gen.uniform(0, 3), gen.uniform(0, 3));
    ASSERT_TRUE(validate_miyata(d).all_passed());
    const Immersion im = Immersion::build(d);
    EXPECT_LE(mean_curvature(im, gen.point()).pseudo_umbilical_residual, 1e-9);
  }
}

TEST(PseudoUmbilical, UnbalancedBlocksDoNot) {
  testing::Gen gen(5);
  for (int k = 0; k < 20; ++k) {
    const double h = gen.h();
    const Immersion im = from_structure(h, gen.rho_normalized(h));
    // Sum R_k mu_k^2 = 1 for every S^5 member.
    EXPECT_GT(mean_curvature(im, gen.point()).pseudo_umbilical_residual, 1e-4);
  }
  const Immersion s7 = extend_dimension(from_structure(0.5, 0.5));
  EXPECT_GT(mean_curvature(s7, {0.2, 0.1}).pseudo_umbilical_residual, 1e-4);
}

TEST(Tension, TwiceMeanCurvature) {
  testing::Gen gen(6);
  for (int k = 0; k < 30; ++k) {
    const double h = gen.h();
    const Immersion im = from_structure(h, gen.rho_normalized(h));
    const EvalPoint p = gen.point();
    const AmbientVector t = tension(im, p);
    EXPECT_LT((t - 2.0 * mean_curvature(im, p).h_vector).norm(), 1e-10);
    EXPECT_NEAR(t.norm(), 2.0 * h, 1e-10);
    EXPECT_NEAR(t.dot(im.partial(p, 1, 0)), 0.0, 1e-9);
  }
}

TEST(Bitension, VanishesOnFamily) {
  testing::Gen gen(7);
  for (int k = 0; k < 20; ++k) {
    const double h = gen.h();
    const Immersion im = from_structure(h, gen.rho_normalized(h));
    for (int j = 0; j < 100; ++j) ASSERT_LE(bitension(im, gen.point()).norm(), 1e-7);
  }
}

TEST(Bitension, NegativeControlBothPipelines) {
  const Immersion im = Immersion::build_unchecked(broken_weights(0.5, 0.3));
  testing::Gen gen(8);
  for (int j = 0; j < 10; ++j) {
    const EvalPoint p = gen.point();
    EXPECT_GT(bitension(im, p).norm(), 1e-3);
    EXPECT_GT(fd_bitension_oracle(im, p, 1e-2).norm(), 1e-3);
  }
}

TEST(FdOracle, AgreesAtSpecPoint) {
  const Immersion im = from_structure(0.5, 0.3);
  const EvalPoint p{0.1, 0.2};
  EXPECT_LT((fd_bitension_oracle(im, p, 1e-2) - bitension(im, p)).norm(), 1e-5);
}

TEST(FdOracle, FourthOrderConvergence) {
  const Immersion im = from_structure(0.5, 0.3);
  const std::array<double, 4> ladder{1e-1, 5e-2, 2.5e-2, 1.25e-2};
  const FdConvergence c = fd_bitension_convergence(im, {0.1, 0.2}, ladder);
  EXPECT_GE(c.fitted_order, 3.5);
  for (double o : c.pairwise_orders) EXPECT_GE(o, 3.5);
  // Halving 1e-2 -> 5e-3 cuts the error by about 16.
  const double d1 = (fd_bitension_oracle(im, {0.1, 0.2}, 1e-2) - bitension(im, {0.1, 0.2})).norm();
  const double d2 = (fd_bitension_oracle(im, {0.1, 0.2}, 5e-3) - bitension(im, {0.1, 0.2})).norm();
  EXPECT_NEAR(d1 / d2, 16.0, 1.0);
}

TEST(FdOracle, StepOutsideRangeThrows) {
  const Immersion im = from_structure(0.5, 0.3);
  EXPECT_THROW(fd_bitension_oracle(im, {0, 0}, 0.5), DomainError);
  EXPECT_THROW(fd_bitension_oracle(im, {0, 0}, 1e-5), DomainError);
}

// Polynomial map with every monomial x^i y^j, i, j <= 4. Tensor stencils of
// fourth-order accuracy are exact on these by their moment conditions.
class Monomials final : public SurfaceMap {
 public:
  std::size_t ambient_dim() const override { return 25; }
  int max_derivative_order() const override { return 4; }
  AmbientVector partial(const EvalPoint& p, int dx, int dy) const override {
    AmbientVector v(25);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) v[5 * i + j] = falling(p.x, i, dx) * falling(p.y, j, dy);
    return v;
  }

 private:
  static double falling(double x, int n, int d) {
    if (d > n) return 0.0;
    double c = 1.0;
    for (int k = 0; k < d; ++k) c *= n - k;
    return c * std::pow(x, n - d);
  }
};

TEST(FdOracle, StencilsSatisfyMomentConditions) {
  const Monomials m;
  const EvalPoint p{0.3, -0.2};
  const DerivativeJet jet = fd_jet(m, p, 0.1);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) EXPECT_LT((jet.at(a, b) - m.partial(p, a, b)).norm(), 1e-9) << a << "," << b;
}

TEST(VerifyImmersion, FamilyPasses) {
  testing::Gen gen(9);
  for (int k = 0; k < 10; ++k) {
    const double h = gen.h();
    const VerificationReport r = verify_immersion(from_structure(h, gen.rho_normalized(h)), {100, 3, 10.0});
    EXPECT_TRUE(r.all_passed()) << r.failed_names().front();
  }
}

TEST(VerifyImmersion, BrokenWeightsFailBalance) {
  const VerificationReport r = verify_immersion(Immersion::build_unchecked(broken_weights(0.5, 0.3)), {20, 0, 10.0});
  EXPECT_FALSE(r.find("miyata_balance")->passed);
  EXPECT_FALSE(r.find("bitension")->passed);
}

TEST(VerifyImmersion, Deterministic) {
  const Immersion im = from_structure(0.3, 0.2);
  const VerificationReport a = verify_immersion(im, {50, 42, 10.0});
  const VerificationReport b = verify_immersion(im, {50, 42, 10.0});
  ASSERT_EQ(a.checks().size(), b.checks().size());
  for (std::size_t i = 0; i < a.checks().size(); ++i) EXPECT_EQ(a.checks()[i].residual, b.checks()[i].residual);
}

TEST(DiagonalSum, HandExample) {
  const DiagonalSumResult r = diagonal_sum_check(std::sqrt(2.0 / 3.0), 1);
  EXPECT_NEAR(r.r2 * r.r2, 2.0, 1e-14);
  EXPECT_NEAR(r.h_norm_sq, 0.25, 1e-14);
  EXPECT_TRUE(r.report.all_passed());
}

TEST(DiagonalSum, RandomRadii) {
  testing::Gen gen(10);
  for (int k = 0; k < 40; ++k) {
    double r1 = gen.uniform(1.0 / std::sqrt(2.0) + 1e-3, 3.0);
    if (std::abs(r1 - 1.0) < 1e-3) r1 += 0.01;
    const DiagonalSumResult r = diagonal_sum_check(r1, static_cast<int>(gen.integer(1, 6)));
    EXPECT_TRUE(r.report.all_passed()) << r1;
    EXPECT_NEAR(r.alpha_sq + r.beta_sq, 1.0, 1e-14);
    EXPECT_NEAR(1.0 / (r1 * r1) + 1.0 / (r.r2 * r.r2), 2.0, 1e-13);
  }
}

TEST(DiagonalSum, DomainErrors) {
  EXPECT_THROW(diagonal_sum_check(1.0, 1), DomainError);
  EXPECT_THROW(diagonal_sum_check(0.7, 1), DomainError);
}

TEST(Boruvka, TwoThree) {
  const BoruvkaParams b = boruvka_params(2, 3);
  EXPECT_EQ(b.q1, 6);
  EXPECT_EQ(b.q2, 12);
  EXPECT_EQ(b.h_norm, Rational(1) / Rational(3));
  EXPECT_EQ(b.alpha_sq, Rational(1) / Rational(3));
  EXPECT_EQ(b.r1_sq, Rational(3) / Rational(2));
  EXPECT_EQ(b.r2_sq, Rational(3) / Rational(4));
  EXPECT_EQ(b.alpha_sq * b.r1_sq + b.beta_sq * b.r2_sq, Rational(1));
  EXPECT_EQ(Rational(1) / b.r1_sq + Rational(1) / b.r2_sq, Rational(2));
}

TEST(Boruvka, SymmetricAndIdentities) {
  for (int n1 = 2; n1 <= 8; ++n1)
    for (int n2 = 2; n2 <= 8; ++n2) {
      if (n1 == n2) {
        EXPECT_THROW(boruvka_params(n1, n2), DegenerateError);
        continue;
      }
      const BoruvkaParams a = boruvka_params(n1, n2);
      EXPECT_EQ(a.h_norm, boruvka_params(n2, n1).h_norm);
      EXPECT_EQ(Rational(1) / a.r1_sq + Rational(1) / a.r2_sq, Rational(2));
      EXPECT_EQ(a.alpha_sq + a.beta_sq, Rational(1));
    }
}

}  // namespace
}  // namespace cmcflat
