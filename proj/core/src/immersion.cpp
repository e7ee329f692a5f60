#include "cmcflat/immersion.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cmcflat/errors.hpp"

namespace cmcflat {

namespace {

// n-th derivative of cos and sin evaluated through the phase.
Scalar dcos(int n, Scalar c, Scalar s) {
  switch (n & 3) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
  }
}

Scalar dsin(int n, Scalar c, Scalar s) {
  switch (n & 3) {
    case 0: return s;
    case 1: return c;
    case 2: return -s;
    default: return -c;
  }
}

PlaneWave make_plane(Complex frequency, Scalar lambda, Scalar weight) {
  const Complex u = frequency / std::abs(frequency);
  const Scalar root = std::sqrt(lambda);
  return PlaneWave{Vec2(root * u.imag(), root * u.real()), std::sqrt(weight / 2.0)};
}

// Distinct-from-existing margin for appended frequencies.
constexpr Scalar kFreshFrequencyMargin = 1e-6;

Scalar min_distance_to_pm(Complex candidate, const std::vector<Complex>& existing) {
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (const Complex& e : existing) best = std::min({best, std::abs(candidate - e), std::abs(candidate + e)});
  return best;
}

MiyataData rotate_mu_to_one(const MiyataData& data) {
  MiyataData out = data;
  if (out.mu[0] != Complex(1.0, 0.0)) {
    const Complex rot = std::conj(out.mu[0]) / std::abs(out.mu[0]);
    for (Complex& e : out.eta) e *= rot;
    out.mu[0] = Complex(1.0, 0.0);
  }
  return out;
}

MiyataData extend_s5_to_s7(const MiyataData& d) {
  const Scalar h = d.h;
  const Scalar s = d.rp_weights[0];
  const Complex i(0.0, 1.0);
  MiyataData out;
  out.h = h;
  out.mu = {Complex(1.0, 0.0)};
  out.r_weights = {1.0};
  out.eta = {i * d.eta[0], i * d.eta[1], i};
  out.rp_weights = {h * s, h * (1.0 - s), 1.0 - h};
  const VerificationReport report = validate_miyata(out);
  if (!report.all_passed())
    throw ConstructionError("S^5 -> S^7 extension fails " + report.failed_names().front() +
                            " (the frequencies i*eta_j collide with i; needs 0 < rho < pi/2)");
  return out;
}

MiyataData extend_by_four(const MiyataData& d) {
  const Scalar h = d.h;
  const Scalar lo = h / (1.0 + h);
  const Scalar hi = 1.0 / (1.0 + h);

  std::vector<Scalar> schedule{0.5};
  for (Scalar step = 0.125; step > 1e-12; step /= 2.0) {
    schedule.push_back(0.5 + step);
    schedule.push_back(0.5 - step);
  }
  for (Scalar s : schedule) {
    if (!(s > lo && s < hi)) continue;
    const Scalar rho = 2.0 * std::atan(t_of_s(h, s));
    const Complex a = std::polar(1.0, rho);
    const Complex b = std::polar(1.0, rho_tilde_of(h, rho));
    if (min_distance_to_pm(a, d.eta) <= kFreshFrequencyMargin) continue;
    if (min_distance_to_pm(b, d.eta) <= kFreshFrequencyMargin) continue;

    MiyataData out = d;
    for (Scalar& w : out.rp_weights) w *= 0.5;
    out.eta.push_back(a);
    out.eta.push_back(b);
    out.rp_weights.push_back(0.5 * s);
    out.rp_weights.push_back(0.5 * (1.0 - s));
    if (validate_miyata(out).all_passed()) return out;
  }
  throw ConstructionError("extend_dimension: no admissible distinct frequency pair found on the s schedule");
}

}  // namespace

Immersion::Immersion(MiyataData data) : data_(std::move(data)) {
  const Scalar l1 = lambda1_of(data_.h);
  const Scalar l2 = lambda2_of(data_.h);
  planes_.reserve(data_.m() + data_.m_prime());
  for (std::size_t k = 0; k < data_.m(); ++k) planes_.push_back(make_plane(data_.mu[k], l1, data_.r_weights[k]));
  for (std::size_t j = 0; j < data_.m_prime(); ++j)
    planes_.push_back(make_plane(data_.eta[j], l2, data_.rp_weights[j]));
}

Immersion Immersion::build(const MiyataData& data) {
  require_valid(data);
  return Immersion(data);
}

Immersion Immersion::build_unchecked(const MiyataData& data) {
  validate_miyata(data);
  return Immersion(data);
}

AmbientVector Immersion::partial(const EvalPoint& p, int dx, int dy) const {
  if (dx < 0 || dy < 0) throw DomainError("negative derivative multi-index");
  const int order = dx + dy;
  if (order > kMaxOrder)
    throw UnsupportedError("partial: derivative order " + std::to_string(order) + " exceeds 4");
  AmbientVector out(ambient_dim());
  for (std::size_t i = 0; i < planes_.size(); ++i) {
    const PlaneWave& pw = planes_[i];
    const Scalar phase = pw.wave.x() * p.x + pw.wave.y() * p.y;
    const Scalar c = std::cos(phase);
    const Scalar s = std::sin(phase);
    const Scalar factor = pw.amplitude * std::pow(pw.wave.x(), dx) * std::pow(pw.wave.y(), dy);
    out[2 * i] = factor * dcos(order, c, s);
    out[2 * i + 1] = factor * dsin(order, c, s);
  }
  return out;
}

ExtendedVector Immersion::eval_extended(const Quad& x, const Quad& y) const {
  ExtendedVector out(ambient_dim());
  for (std::size_t i = 0; i < planes_.size(); ++i) {
    const PlaneWave& pw = planes_[i];
    const Quad phase = Quad(pw.wave.x()) * x + Quad(pw.wave.y()) * y;
    const Quad amp = pw.amplitude;
    out[2 * i] = amp * cos(phase);
    out[2 * i + 1] = amp * sin(phase);
  }
  return out;
}

std::pair<AmbientVector, AmbientVector> Immersion::spectral_split(const EvalPoint& p) const {
  const AmbientVector psi = eval(p);
  const auto cut = static_cast<Eigen::Index>(2 * mu_planes());
  AmbientVector t1 = AmbientVector::Zero(psi.size());
  AmbientVector t2 = AmbientVector::Zero(psi.size());
  t1.head(cut) = psi.head(cut);
  t2.tail(psi.size() - cut) = psi.tail(psi.size() - cut);
  return {t1, t2};
}

Immersion from_structure(Scalar h, Scalar rho) { return Immersion::build(lift(structure_params(h, rho))); }

Immersion from_family(Scalar h, Scalar rho) { return Immersion::build(lift(family_params(h, rho))); }

Immersion extend_dimension(const Immersion& im) {
  const MiyataData& data = im.data();
  if (data.m() != 1)
    throw UnsupportedError("extend_dimension supports m = 1 only (got m = " + std::to_string(data.m()) + ")");
  const MiyataData rotated = rotate_mu_to_one(data);
  if (rotated.m_prime() == 2) return Immersion::build(extend_s5_to_s7(rotated));
  return Immersion::build(extend_by_four(rotated));
}

}  // namespace cmcflat
