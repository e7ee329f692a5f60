#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cmcflat/errors.hpp"
#include "cmcflat/immersion.hpp"
#include "cmcflat/parameters.hpp"
#include "generators.hpp"

namespace cmcflat {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

TEST(StructureParams, RhoZeroEndpoint) {
  const StructureParams p = structure_params(0.5, 0.0);
  EXPECT_DOUBLE_EQ(p.r1_prime, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(p.r2_prime, 2.0 / 3.0);
  EXPECT_EQ(p.rho_tilde, -kHalfPi);
  EXPECT_DOUBLE_EQ(p.lambda1, 1.0);
  EXPECT_DOUBLE_EQ(p.lambda2, 3.0);
}

TEST(StructureParams, UpperEndpointHasEqualWeights) {
  for (double h : {0.1, 0.5, 0.9}) {
    const StructureParams p = structure_params(h, rho_max(h));
    EXPECT_NEAR(p.r1_prime, 0.5, 1e-12);
    EXPECT_NEAR(p.r2_prime, 0.5, 1e-12);
    EXPECT_NEAR(p.rho_tilde, -p.rho, 1e-12);
  }
}

TEST(StructureParams, CosTwoRhoMinusThird) {
  const double rho = 0.5 * std::acos(-1.0 / 3.0);
  EXPECT_NEAR(structure_params(0.5, rho).r1_prime, 0.5, 1e-14);
  EXPECT_NEAR(s_of_rho(0.5, rho), 0.5, 1e-14);
}

TEST(StructureParams, OutOfRangeNamesBound) {
  try {
    structure_params(0.5, 1.2);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("rho <="), std::string::npos);
  }
  EXPECT_THROW(structure_params(1.0, 0.1), DomainError);
  EXPECT_THROW(structure_params(0.0, 0.1), DomainError);
  EXPECT_THROW(structure_params(0.5, -0.1), DomainError);
  EXPECT_NO_THROW(family_params(0.5, 1.2));
  EXPECT_THROW(family_params(0.5, 1.6), DomainError);
}

TEST(SOfRho, Endpoints) {
  for (double h : {0.2, 0.5, 0.8}) {
    EXPECT_DOUBLE_EQ(s_of_rho(h, 0.0), h / (1.0 + h));
    EXPECT_NEAR(s_of_rho(h, kHalfPi), 1.0 / (1.0 + h), 1e-15);
  }
}

TEST(SOfRho, StrictlyIncreasingOnGrid) {
  for (double h : {0.05, 0.3, 0.5, 0.7, 0.95}) {
    double prev = s_of_rho(h, 0.0);
    for (int i = 1; i <= 1000; ++i) {
      const double cur = s_of_rho(h, kHalfPi * i / 1000.0);
      ASSERT_GT(cur, prev) << "h=" << h << " i=" << i;
      prev = cur;
    }
  }
}

TEST(TOfS, EndpointsExact) {
  for (double h : {0.1, 0.5, 0.9}) {
    EXPECT_EQ(t_of_s(h, h / (1.0 + h)), 0.0);
    EXPECT_EQ(t_of_s(h, 1.0 / (1.0 + h)), 1.0);
  }
  EXPECT_THROW(t_of_s(0.5, 0.2), DomainError);
  EXPECT_THROW(t_of_s(0.5, 0.7), DomainError);
}

TEST(TOfS, SurdValueAtHalf) {
  const double expected = (std::sqrt(6.0) - std::sqrt(2.0)) / 2.0;
  EXPECT_NEAR(t_of_s(0.5, 0.5), expected, 1e-15);
  EXPECT_NEAR(2.0 * std::atan(expected), rho_of_s(0.5, 0.5), 1e-12);
}

TEST(TOfS, RoundTripOnRandomPairs) {
  testing::Gen gen(2024);
  for (int i = 0; i < 50; ++i) {
    const double h = gen.h();
    const double rho = gen.uniform(0.0, kHalfPi);
    EXPECT_NEAR(t_of_s(h, s_of_rho(h, rho)), std::tan(rho / 2.0), 1e-11) << "h=" << h << " rho=" << rho;
  }
}

TEST(RhoTilde, SpecialValues) {
  for (double h : {0.25, 0.5, 0.75}) {
    EXPECT_EQ(rho_tilde_of(h, 0.0), -kHalfPi);
    EXPECT_EQ(rho_tilde_of(h, kHalfPi), 0.0);
    EXPECT_NEAR(rho_tilde_of(h, std::atan(1.0 / h)), -std::numbers::pi / 4.0, 1e-15);
  }
}

TEST(RhoTilde, EndpointContinuity) {
  for (double h : {0.05, 0.5, 0.95}) {
    EXPECT_NEAR(rho_tilde_of(h, 1e-10), -kHalfPi, 1e-8);
    EXPECT_NEAR(rho_tilde_of(h, kHalfPi - 1e-10), 0.0, 1e-8);
    EXPECT_NEAR(s_of_rho(h, 1e-10), h / (1.0 + h), 1e-8);
    EXPECT_NEAR(s_of_rho(h, kHalfPi - 1e-10), 1.0 / (1.0 + h), 1e-8);
  }
}

TEST(ValidateMiyata, LiftedStructurePasses) { EXPECT_TRUE(validate_miyata(lift(structure_params(0.5, 0.0))).all_passed()); }

TEST(ValidateMiyata, BalanceHoldsOnRandomFamilyMembers) {
  testing::Gen gen(7);
  for (int i = 0; i < 100; ++i) {
    const double h = gen.h();
    const double rho = gen.rho_normalized(h);
    const VerificationReport r = validate_miyata(lift(structure_params(h, rho)));
    // rho = 0 collides no frequencies, so every member is a valid datum.
    EXPECT_TRUE(r.all_passed()) << "h=" << h << " rho=" << rho << " " << r.failed_names().front();
  }
}

TEST(ValidateMiyata, DuplicateFrequencyFailsDistinctness) {
  MiyataData d = lift(structure_params(0.5, rho_max(0.5)));
  d.eta[1] = d.eta[0];
  const VerificationReport r = validate_miyata(d);
  EXPECT_FALSE(r.find("distinct_eta")->passed);
}

TEST(ValidateMiyata, WeightSumFails) {
  MiyataData d = lift(structure_params(0.5, 0.3));
  d.rp_weights[0] -= 0.1;
  const VerificationReport r = validate_miyata(d);
  EXPECT_FALSE(r.find("weights_sum_Rp")->passed);
  EXPECT_TRUE(r.find("weights_sum_R")->passed);
}

TEST(ValidateMiyata, MalformedShapeThrows) {
  MiyataData d = lift(structure_params(0.5, 0.3));
  d.rp_weights.pop_back();
  EXPECT_THROW(validate_miyata(d), ValidationError);
}

TEST(Canonicalize, Idempotent) {
  testing::Gen gen(5);
  for (int i = 0; i < 30; ++i) {
    const double h = gen.h();
    const MiyataData once = canonicalize(lift(family_params(h, gen.uniform(0.0, kHalfPi))));
    EXPECT_EQ(canonicalize(once), once);
  }
}

TEST(Canonicalize, RejectsGeneralM) {
  MiyataData d = lift(structure_params(0.5, 0.3));
  d.mu = {Complex(1, 0), Complex(0, 1)};
  d.r_weights = {0.5, 0.5};
  EXPECT_THROW(canonicalize(d), UnsupportedError);
}

TEST(Canonicalize, RotationMatchesRotatedDomain) {
  const double theta = std::numbers::pi / 6.0;
  const Complex rot = std::polar(1.0, theta);
  const MiyataData base = lift(structure_params(0.5, 0.4));
  MiyataData rotated = base;
  rotated.mu[0] *= rot;
  for (Complex& e : rotated.eta) e *= rot;

  const MiyataData out = canonicalize(rotated);
  EXPECT_EQ(out.mu[0], Complex(1.0, 0.0));
  const Immersion in_im = Immersion::build(rotated);
  const Immersion out_im = Immersion::build(out);
  const double c = std::cos(-theta), s = std::sin(-theta);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double x = -2.0 + i, y = -2.0 + j;
      const AmbientVector a = in_im.eval({c * x - s * y, s * x + c * y});
      EXPECT_LT((a - out_im.eval({x, y})).norm(), 1e-12);
    }
}

// True when, for some reflection choice T and the swapped block order, every
// plane of b(z) matches a plane of a(Tz) with the sine coordinate fixed up
// to one sign per plane.
bool matches_after_swap(const Immersion& a, const Immersion& b) {
  const std::array<std::size_t, 3> perm{0, 2, 1};
  for (const double reflect : {1.0, -1.0}) {
    bool ok = true;
    std::array<double, 3> sign{0, 0, 0};
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = 0; j < 5 && ok; ++j) {
        const double x = -2.0 + 1.1 * i, y = -2.0 + 0.9 * j;
        const AmbientVector pa = a.eval({reflect * x, y});
        const AmbientVector pb = b.eval({x, y});
        for (std::size_t k = 0; k < 3 && ok; ++k) {
          const std::size_t q = perm[k];
          if (std::abs(pb[2 * k] - pa[2 * q]) > 1e-12) ok = false;
          if (sign[k] == 0 && std::abs(pa[2 * q + 1]) > 1e-3) sign[k] = pb[2 * k + 1] / pa[2 * q + 1] > 0 ? 1 : -1;
          if (sign[k] != 0 && std::abs(pb[2 * k + 1] - sign[k] * pa[2 * q + 1]) > 1e-12) ok = false;
        }
      }
    if (ok) return true;
  }
  return false;
}

TEST(Canonicalize, WideRhoSwapsBlocks) {
  const double h = 0.5;
  const MiyataData wide = lift(family_params(h, 1.2));
  ASSERT_GT(1.2, rho_max(h));
  const MiyataData out = canonicalize(wide);
  EXPECT_DOUBLE_EQ(out.rp_weights[0], wide.rp_weights[1]);
  EXPECT_DOUBLE_EQ(out.rp_weights[1], wide.rp_weights[0]);
  EXPECT_LE(out.rp_weights[0], 0.5);
  EXPECT_TRUE(matches_after_swap(Immersion::build(wide), Immersion::build(out)));
}

}  // namespace
}  // namespace cmcflat
