#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmcflat/lattice.hpp"
#include "cmcflat/parameters.hpp"
#include "cmcflat/planar.hpp"

namespace cmcflat {

/// Dual lattice {w : <w, z> in 2 pi Z for all z in the primal}.
struct DualLattice {
  std::array<Vec2, 2> gens;
  // Gram of gens in absolute units: 4 G^{-1} for a primal Gram pi^2 G.
  ExactGram exact_gram;
};

/// Rank-2 lattice with exact Gram data required; otherwise ExactnessError
/// (missing Gram) or DomainError (rank < 2).
DualLattice dual_lattice(const Lattice2& lat);

/// c(Lambda, r): the distinct complex squares of dual vectors of squared
/// length radius_sq.
struct CircleSquareSet {
  Rational radius_sq;
  std::vector<Complex> points;
  // One representative (a, b) per point (w = a g1* + b g2*); -w squares to the same point.
  std::vector<std::pair<long long, long long>> preimages;
  std::vector<Vec2> dual_vectors;
  // Exact image of each point under a fixed invertible linear map of C (a
  // rotation followed by rescaling the imaginary axis); convexity predicates
  // are evaluated here.
  std::vector<planar::Point> exact;
};

inline constexpr long long kCircleEnumerationCap = 50'000'000;

/// Enumerates the integer pairs with Q(a, b) = radius_sq, Q the dual Gram form.
/// Throws UnsupportedError when the bounding box exceeds kCircleEnumerationCap.
CircleSquareSet circle_points(const DualLattice& dual, const Rational& radius_sq);

struct Witness {
  std::vector<std::size_t> alpha_indices;
  std::vector<std::size_t> gamma_indices;
  std::vector<Rational> r_weights;
  std::vector<Rational> rp_weights;
};

/// Positive weights with sum alpha_k R_k + sum gamma_j R'_j = 0, each block
/// summing to one, if the two circle sets allow them.
std::optional<Witness> witness_weights(const CircleSquareSet& a, const CircleSquareSet& g);

/// Frequencies mu = i conj(w) / sqrt(lambda1) and eta likewise, so the wave
/// vector of every plane is the dual vector w itself and the immersion is
/// periodic over the primal lattice.
MiyataData witness_data(const Rational& h, const CircleSquareSet& a, const CircleSquareSet& g, const Witness& w);

enum class AdmissibleVerdict { exists_pseudo_umbilical, exists, none_empty_circle, none_hull, none, undecided };

const char* to_string(AdmissibleVerdict v);

struct AdmissibilityResult {
  AdmissibleVerdict verdict = AdmissibleVerdict::undecided;
  Rational h;
  CircleSquareSet alpha;
  CircleSquareSet gamma;
  std::optional<Witness> witness;
  std::optional<MiyataData> data;
  std::string note;
};

AdmissibilityResult admissible(const Lattice2& lat, const Rational& h);

}  // namespace cmcflat
