#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmcflat/immersion.hpp"
#include "cmcflat/lattice.hpp"
#include "cmcflat/rational.hpp"

namespace cmcflat {

/// Lattice of periods {z : psi(z) = psi(0)} inside the disc |z| <= search_bound.
///
/// Requires m = 1 and mu_1 = 1 (canonical data); anything else raises
/// ValidationError. Candidates come from the congruences <w, z> in 2 pi Z for
/// every plane wave vector w, and each one is re-checked by evaluation.
Lattice2 period_lattice(const Immersion& im, Scalar search_bound);

/// All period points z != 0 with |z| <= search_bound (unsorted).
std::vector<Vec2> period_points(const Immersion& im, Scalar search_bound);

/// F(rho) = (sin rho~ / sin rho)(K1 - r K0 cos rho) + r K0 cos rho~, r = sqrt(lambda2/lambda1).
Scalar direction_function(Scalar h, long long k0, long long k1, Scalar rho);

struct PeriodicDirection {
  Scalar rho = 0.0;
  long long k2 = 0;
  Vec2 v;
  Scalar residual = 0.0;  // |psi_rho(v) - psi_rho(0)|
};

/// Every rho in [lo, hi] where F(rho) is an integer, by an 8192-cell scan and
/// bisection; each result carries the period vector of psi_{h, rho}.
std::vector<PeriodicDirection> periodic_direction_search(Scalar h, long long k0, long long k1, Scalar lo, Scalar hi);

struct TorusCaseI {
  Rational q;
  Rational h;
  Lattice2 lattice;  // periods of from_structure(h, 0)
};

/// h = (q^2 - 1)/(q^2 + 1) for rational q > 1.
TorusCaseI torus_case_i(const Rational& q);

struct TorusParams {
  long long p = 0;
  long long q = 0;
  long long r = 0;
  long long t = 0;
  Rational a;
  Rational b;
  Rational h;
  Rational s;
};

struct TorusCaseII {
  TorusParams params;
  Scalar rho = 0.0;  // psi_{h, rho} on the wider family range
  Vec2 v1;
  Vec2 v2;
  ExactGram gram_v1_v2;  // Gram of (v1, v2) in units of pi^2
  Lattice2 lattice;      // full period lattice {m v2 + n v1 : m q/p - n qr/(pt) in Z}
  Lattice2 sublattice;   // {m' (p v2) + n' (p t v1)}
  std::string lattice_condition;
};

/// Torus family for a = p^2/q^2, b = r^2/t^2 with (a - b)^2 < 1.
TorusCaseII torus_case_ii(long long p, long long q, long long r, long long t);

/// The immersion whose periods torus_case_ii describes.
Immersion torus_immersion(const TorusCaseII& c);

enum class TorusVerdictKind { case_i, case_ii, not_found };

struct TorusVerdict {
  TorusVerdictKind kind = TorusVerdictKind::not_found;
  Rational h;
  std::optional<TorusCaseI> case_i;
  std::optional<TorusCaseII> case_ii;
};

/// Case i is decided exactly. Case ii searches p, q, r, t <= search_bound and
/// returns the lexicographically smallest witness; not_found only means no
/// witness inside the bound.
TorusVerdict torus_exists(const Rational& h, long long search_bound);

const char* to_string(TorusVerdictKind kind);

}  // namespace cmcflat
