#include "cmcflat/parameters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "cmcflat/errors.hpp"

namespace cmcflat {

namespace {

constexpr Scalar kHalfPi = kPi / 2.0;
// Slack for range endpoints that are themselves computed in floating point.
constexpr Scalar kRangeSlack = 1e-12;

std::string fmt(Scalar v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_h(Scalar h) {
  if (!(h > 0.0 && h < 1.0)) throw DomainError("h = " + fmt(h) + " violates 0 < h < 1");
}

void require_rho(Scalar rho, Scalar upper, const char* upper_name) {
  if (!(rho >= 0.0)) throw DomainError("rho = " + fmt(rho) + " violates rho >= 0");
  if (!(rho <= upper + kRangeSlack))
    throw DomainError("rho = " + fmt(rho) + " violates rho <= " + upper_name + " = " + fmt(upper));
}

Scalar min_pairwise_distance_with_negatives(const std::vector<Complex>& values) {
  std::vector<Complex> all;
  all.reserve(2 * values.size());
  for (const Complex& v : values) {
    all.push_back(v);
    all.push_back(-v);
  }
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) best = std::min(best, std::abs(all[i] - all[j]));
  return best;
}

Scalar max_norm_defect(const std::vector<Complex>& values) {
  Scalar worst = 0.0;
  for (const Complex& v : values) worst = std::max(worst, std::abs(std::abs(v) - 1.0));
  return worst;
}

Scalar sum(const std::vector<Scalar>& v) {
  Scalar s = 0.0;
  for (Scalar x : v) s += x;
  return s;
}

// Representative of {eta, -eta} with Re > 0, or Re == 0 and Im < 0.
Complex representative(Complex eta) {
  if (eta.real() < 0.0 || (eta.real() == 0.0 && eta.imag() > 0.0)) return -eta;
  return eta;
}

}  // namespace

Scalar rho_max(Scalar h) {
  require_h(h);
  return 0.5 * std::acos((h - 1.0) / (1.0 + h));
}

Scalar s_of_rho(Scalar h, Scalar rho) {
  require_h(h);
  require_rho(rho, kHalfPi, "pi/2");
  if (rho == 0.0) return h / (1.0 + h);
  return 2.0 * h / ((1.0 + h) * (1.0 + h + (1.0 - h) * std::cos(2.0 * rho)));
}

Scalar t_of_s(Scalar h, Scalar s) {
  require_h(h);
  const Scalar lo = h / (1.0 + h);
  const Scalar hi = 1.0 / (1.0 + h);
  if (!(s >= lo - kRangeSlack && s <= hi + kRangeSlack))
    throw DomainError("s = " + fmt(s) + " violates h/(1+h) <= s <= 1/(1+h) = [" + fmt(lo) + ", " + fmt(hi) + "]");
  if (s == lo) return 0.0;
  if (s == hi) return 1.0;
  // Rationalized form of (sqrt(s(1-h^2)) - sqrt(h(1-s-hs))) / sqrt(s-(1-s)h):
  // the numerator difference equals s(1+h) - h, which removes the
  // cancellation near s = h/(1+h).
  const Scalar gap = std::max(0.0, s * (1.0 + h) - h);
  const Scalar a = std::sqrt(std::max(0.0, s * (1.0 - h * h)));
  const Scalar b = std::sqrt(std::max(0.0, h * (1.0 - s - h * s)));
  return std::clamp(std::sqrt(gap) / (a + b), 0.0, 1.0);
}

Scalar rho_of_s(Scalar h, Scalar s) {
  require_h(h);
  const Scalar lo_s = h / (1.0 + h);
  const Scalar hi_s = 1.0 / (1.0 + h);
  if (!(s >= lo_s - kRangeSlack && s <= hi_s + kRangeSlack))
    throw DomainError("s = " + fmt(s) + " violates h/(1+h) <= s <= 1/(1+h)");
  Scalar lo = 0.0;
  Scalar hi = kHalfPi;
  while (hi - lo > 1e-13) {
    const Scalar mid = 0.5 * (lo + hi);
    if (s_of_rho(h, mid) < s)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Scalar rho_tilde_of(Scalar h, Scalar rho) {
  require_h(h);
  require_rho(rho, kHalfPi, "pi/2");
  if (rho == 0.0) return -kHalfPi;
  if (rho >= kHalfPi) return 0.0;
  return std::atan(-1.0 / (h * std::tan(rho)));
}

StructureParams family_params(Scalar h, Scalar rho) {
  require_h(h);
  require_rho(rho, kHalfPi, "pi/2");
  StructureParams p;
  p.h = h;
  p.rho = std::min(rho, kHalfPi);
  p.lambda1 = lambda1_of(h);
  p.lambda2 = lambda2_of(h);
  if (rho == 0.0) {
    p.r1_prime = h / (1.0 + h);
    p.r2_prime = 1.0 / (1.0 + h);
    p.rho_tilde = -kHalfPi;
    return p;
  }
  const Scalar k = (1.0 - h) / (1.0 + h);
  p.r1_prime = (1.0 - k * k) / (2.0 * (1.0 + k * std::cos(2.0 * p.rho)));
  p.r2_prime = 1.0 - p.r1_prime;
  p.rho_tilde = rho_tilde_of(h, p.rho);
  return p;
}

StructureParams structure_params(Scalar h, Scalar rho) {
  require_h(h);
  const Scalar upper = rho_max(h);
  require_rho(rho, upper, "(1/2)arccos((h-1)/(1+h))");
  return family_params(h, std::min(rho, upper));
}

MiyataData lift(const StructureParams& params) {
  MiyataData d;
  d.h = params.h;
  d.mu = {Complex(1.0, 0.0)};
  d.r_weights = {1.0};
  d.eta = {std::polar(1.0, params.rho), std::polar(1.0, params.rho_tilde)};
  d.rp_weights = {params.r1_prime, params.r2_prime};
  return d;
}

Complex balance(const MiyataData& data) {
  Complex mu_sum(0.0, 0.0);
  for (std::size_t k = 0; k < data.mu.size(); ++k) mu_sum += data.mu[k] * data.mu[k] * data.r_weights[k];
  Complex eta_sum(0.0, 0.0);
  for (std::size_t j = 0; j < data.eta.size(); ++j) eta_sum += data.eta[j] * data.eta[j] * data.rp_weights[j];
  return (1.0 - data.h) * mu_sum + (1.0 + data.h) * eta_sum;
}

VerificationReport validate_miyata(const MiyataData& data) {
  if (data.mu.empty() || data.eta.empty()) throw ValidationError("MiyataData needs m >= 1 and m' >= 1");
  if (data.mu.size() != data.r_weights.size())
    throw ValidationError("MiyataData: mu and R have different lengths");
  if (data.eta.size() != data.rp_weights.size())
    throw ValidationError("MiyataData: eta and Rp have different lengths");

  VerificationReport report;
  const Scalar h_gap = (data.h > 0.0 && data.h < 1.0) ? 0.0 : std::max(-data.h, data.h - 1.0) + 1.0;
  report.add("h_range", h_gap, 0.0);
  report.add("weights_sum_R", std::abs(sum(data.r_weights) - 1.0), kWeightSumTolerance);
  report.add("weights_sum_Rp", std::abs(sum(data.rp_weights) - 1.0), kWeightSumTolerance);

  Scalar min_weight = std::numeric_limits<Scalar>::infinity();
  for (Scalar w : data.r_weights) min_weight = std::min(min_weight, w);
  for (Scalar w : data.rp_weights) min_weight = std::min(min_weight, w);
  // Shortfall below the smallest positive double: zero weights fail too.
  report.add("weights_positive", std::max(0.0, std::numeric_limits<Scalar>::min() - min_weight), 0.0);

  report.add("unit_norm_mu", max_norm_defect(data.mu), kUnitNormTolerance);
  report.add("unit_norm_eta", max_norm_defect(data.eta), kUnitNormTolerance);
  report.add("distinct_mu", std::max(0.0, kDistinctThreshold - min_pairwise_distance_with_negatives(data.mu)), 0.0);
  report.add("distinct_eta", std::max(0.0, kDistinctThreshold - min_pairwise_distance_with_negatives(data.eta)), 0.0);
  report.add("miyata_balance", std::abs(balance(data)), kBalanceTolerance);
  return report;
}

void require_valid(const MiyataData& data) {
  const VerificationReport report = validate_miyata(data);
  for (const Check& c : report.checks())
    if (!c.passed) throw ValidationError("MiyataData fails " + c.name + " (residual " + fmt(c.residual) + ")");
}

MiyataData canonicalize(const MiyataData& data) {
  if (data.m() != 1)
    throw UnsupportedError("canonicalize supports m = 1 only (got m = " + std::to_string(data.m()) + ")");
  require_valid(data);

  MiyataData out = data;
  if (out.mu[0] != Complex(1.0, 0.0)) {
    const Complex rot = std::conj(out.mu[0]);
    for (Complex& e : out.eta) e *= rot;
    out.mu[0] = Complex(1.0, 0.0);
  }
  for (Complex& e : out.eta) e = representative(e);
  if (out.m_prime() != 2) return out;

  constexpr Scalar tol = 1e-12;
  // (swap blocks, conjugate) candidates in a fixed order; an already
  // canonical input is accepted by the first one, which makes this idempotent.
  constexpr std::array<std::array<bool, 2>, 4> candidates{{{false, false}, {false, true}, {true, false}, {true, true}}};
  for (const auto& [swap, conj] : candidates) {
    Complex e1 = swap ? out.eta[1] : out.eta[0];
    Complex e2 = swap ? out.eta[0] : out.eta[1];
    const Scalar w1 = swap ? out.rp_weights[1] : out.rp_weights[0];
    const Scalar w2 = swap ? out.rp_weights[0] : out.rp_weights[1];
    if (conj) {
      e1 = std::conj(e1);
      e2 = std::conj(e2);
    }
    if ((e1 * e1).imag() >= -tol && (e2 * e2).imag() <= tol && w1 <= 0.5 + tol) {
      MiyataData result = out;
      result.eta = {representative(e1), representative(e2)};
      result.rp_weights = {w1, w2};
      return result;
    }
  }
  throw ValidationError("canonicalize: no symmetry reduction reaches the normalized range");
}

}  // namespace cmcflat
