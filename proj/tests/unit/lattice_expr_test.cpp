#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cmcflat/errors.hpp"
#include "cmcflat/lattice_expr.hpp"

namespace cmcflat {
namespace {

const double kPi = std::numbers::pi;

TEST(ParseSurd, Values) {
  EXPECT_NEAR(parse_surd("2*pi").value(), 2 * kPi, 1e-15);
  EXPECT_NEAR(parse_surd("-pi*sqrt(5)/3").value(), -kPi * std::sqrt(5.0) / 3, 1e-15);
  EXPECT_NEAR(parse_surd("pi + 2*pi").value(), 3 * kPi, 1e-15);
  EXPECT_NEAR(parse_surd("sqrt(12)").value(), 2 * std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(parse_surd("4/sqrt(2)").value(), 2 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(parse_surd("0").value(), 0.0, 0.0);
}

TEST(ParseSurd, CombinesLikeTerms) {
  const SurdSum s = parse_surd("pi*sqrt(8) - 2*pi*sqrt(2)");
  EXPECT_TRUE(s.terms().empty());
  const SurdSum t = parse_surd("sqrt(3)*sqrt(3)*pi*pi");
  EXPECT_EQ(t.pi_squared_multiple(), Rational(3));
}

TEST(ParseSurd, Errors) {
  EXPECT_THROW(parse_surd("0.5*pi"), ParseError);
  EXPECT_THROW(parse_surd("2*"), ParseError);
  EXPECT_THROW(parse_surd("pi/0"), ParseError);
  EXPECT_THROW(parse_surd("tau"), ParseError);
  EXPECT_THROW(parse_surd("sqrt 2"), ParseError);
}

TEST(PiSquaredMultiple, RejectsMixedTerms) {
  EXPECT_THROW((parse_surd("pi") * parse_surd("1")).pi_squared_multiple(), ExactnessError);
  EXPECT_THROW((parse_surd("pi*sqrt(2)") * parse_surd("pi")).pi_squared_multiple(), ExactnessError);
  EXPECT_EQ((parse_surd("pi*sqrt(2)") * parse_surd("pi*sqrt(8)")).pi_squared_multiple(), Rational(4));
}

TEST(ParseLatticeJson, ScaledSquare) {
  const Lattice2 lat = parse_lattice_json(R"J({"gens": [["2*pi*sqrt(5)", "0"], ["0", "2*pi*sqrt(5)"]]})J");
  ASSERT_EQ(lat.rank(), 2);
  EXPECT_EQ(*lat.exact_gram(), (ExactGram{Rational(20), Rational(0), Rational(20)}));
  EXPECT_NEAR(lat.gens()[0].norm(), 2 * kPi * std::sqrt(5.0), 1e-13);
}

TEST(ParseLatticeJson, HexagonalExactGram) {
  const Lattice2 lat = parse_lattice_json(R"J({"gens": [["2*pi", "0"], ["pi", "pi*sqrt(3)"]]})J");
  const ExactGram& g = *lat.exact_gram();
  EXPECT_EQ(g.det(), Rational(12));
  EXPECT_EQ(g.g11, Rational(4));
  EXPECT_EQ(g.g22, Rational(4));
}

TEST(ParseLatticeJson, Errors) {
  EXPECT_THROW(parse_lattice_json(R"({"gens": [["1", "0"], ["0", "pi"]]})"), ExactnessError);
  EXPECT_THROW(parse_lattice_json(R"({"gens": [["pi", "0"]]})"), ParseError);
  EXPECT_THROW(parse_lattice_json(R"({"gens": [["pi", "0"], ["2*pi", "0"]]})"), DegenerateError);
  EXPECT_THROW(parse_lattice_json("not json"), ParseError);
  EXPECT_THROW(parse_lattice_json(R"({"gens": [[3.5, 0], [0, 1]]})"), ParseError);
}

}  // namespace
}  // namespace cmcflat
