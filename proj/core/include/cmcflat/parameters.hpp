#pragma once

#include <cstddef>
#include <vector>

#include "cmcflat/report.hpp"
#include "cmcflat/types.hpp"

namespace cmcflat {

/// One member of the (h, rho) family of flat CMC biharmonic immersions into S^5.
///
/// The eigenvalues are lambda1 = 2(1-h) and lambda2 = 2(1+h); the two
/// eta-frequencies are e^{i rho} and e^{i rho_tilde} with weights r1_prime and
/// r2_prime.
struct StructureParams {
  Scalar h = 0.0;
  Scalar rho = 0.0;
  Scalar rho_tilde = 0.0;
  Scalar r1_prime = 0.0;
  Scalar r2_prime = 0.0;
  Scalar lambda1 = 0.0;
  Scalar lambda2 = 0.0;
};

/// Parameter set (h, mu_k, eta_j, R_k, R'_j) of a flat CMC proper-biharmonic
/// immersion R^2 -> S^n with n = 2m + 2m' - 1.
struct MiyataData {
  Scalar h = 0.0;
  std::vector<Complex> mu;
  std::vector<Complex> eta;
  std::vector<Scalar> r_weights;
  std::vector<Scalar> rp_weights;

  std::size_t m() const { return mu.size(); }
  std::size_t m_prime() const { return eta.size(); }
  std::size_t ambient_dim() const { return 2 * (mu.size() + eta.size()); }

  friend bool operator==(const MiyataData&, const MiyataData&) = default;
};

// Numeric gates used by validate_miyata.
inline constexpr Scalar kUnitNormTolerance = 1e-12;
inline constexpr Scalar kDistinctThreshold = 1e-9;
inline constexpr Scalar kBalanceTolerance = 1e-10;
inline constexpr Scalar kWeightSumTolerance = 1e-12;

inline Scalar lambda1_of(Scalar h) { return 2.0 * (1.0 - h); }
inline Scalar lambda2_of(Scalar h) { return 2.0 * (1.0 + h); }

/// Upper end of the normalized rho range, (1/2) arccos((h-1)/(1+h)).
Scalar rho_max(Scalar h);

/// Weight R'_1 = s as a function of rho on [0, pi/2]; strictly increasing.
Scalar s_of_rho(Scalar h, Scalar rho);

/// tan(rho/2) recovered from the weight s in [h/(1+h), 1/(1+h)].
Scalar t_of_s(Scalar h, Scalar s);

/// rho in [0, pi/2] with s_of_rho(h, rho) = s, by bisection to 1e-13.
Scalar rho_of_s(Scalar h, Scalar s);

/// Second angle of the S^5 family: -pi/2 at rho = 0, 0 at rho = pi/2,
/// arctan(-1/(h tan rho)) in between.
Scalar rho_tilde_of(Scalar h, Scalar rho);

/// Family member restricted to the normalized range rho in [0, rho_max(h)].
StructureParams structure_params(Scalar h, Scalar rho);

/// Same family on the wider range rho in [0, pi/2] (before the block swap).
StructureParams family_params(Scalar h, Scalar rho);

/// m = 1, mu_1 = 1, R_1 = 1 data of a family member.
MiyataData lift(const StructureParams& params);

/// Checks the weight, norm, distinctness and balance conditions. Malformed
/// input (mismatched lengths, empty blocks) raises ValidationError instead.
VerificationReport validate_miyata(const MiyataData& data);

/// Throws ValidationError naming the first failing condition.
void require_valid(const MiyataData& data);

/// (1-h) sum mu_k^2 R_k + (1+h) sum eta_j^2 R'_j.
Complex balance(const MiyataData& data);

/// Symmetry reduction for m = 1: rotate so mu_1 = 1, pick the representative
/// of each +-eta_j, and for m' = 2 reflect/swap the eta blocks so that
/// rho in [0, rho_max] and rho_tilde in [-pi/2, 0].
MiyataData canonicalize(const MiyataData& data);

}  // namespace cmcflat
