#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cmcflat/parameters.hpp"
#include "cmcflat/surface.hpp"

namespace cmcflat {

/// One coordinate plane (E_{2i-1}, E_{2i}) of the ambient space. The plane's
/// coordinates are amplitude * (cos<wave, z>, sin<wave, z>).
struct PlaneWave {
  Vec2 wave;
  Scalar amplitude = 0.0;
};

/// Evaluatable immersion psi : R^2 -> R^{2m+2m'} into the unit sphere.
///
/// Planes are laid out mu-blocks first, then eta-blocks, so the two spectral
/// components are contiguous coordinate slices. A frequency e^{i omega} with
/// eigenvalue lambda has wave vector sqrt(lambda) (sin omega, cos omega) and
/// the plane amplitude is sqrt(R/2), which makes |psi| = 1 identically.
class Immersion final : public SurfaceMap {
 public:
  static constexpr int kMaxOrder = 4;

  /// Validates the data and tabulates the plane waves.
  static Immersion build(const MiyataData& data);

  /// Tabulates without the numeric conditions (structural shape is still
  /// required). Used for negative controls and for reporting on broken input.
  static Immersion build_unchecked(const MiyataData& data);

  const MiyataData& data() const { return data_; }
  const std::vector<PlaneWave>& planes() const { return planes_; }
  std::size_t mu_planes() const { return data_.m(); }

  std::size_t ambient_dim() const override { return 2 * planes_.size(); }
  int max_derivative_order() const override { return kMaxOrder; }

  /// Exact derivative of order dx + dy <= 4; higher orders throw
  /// UnsupportedError.
  AmbientVector partial(const EvalPoint& p, int dx, int dy) const override;
  ExtendedVector eval_extended(const Quad& x, const Quad& y) const override;

  /// (psi_t1, psi_t2): the mu-block and eta-block parts of psi, each as a full
  /// ambient vector with the other block zeroed.
  std::pair<AmbientVector, AmbientVector> spectral_split(const EvalPoint& p) const;

 private:
  explicit Immersion(MiyataData data);

  MiyataData data_;
  std::vector<PlaneWave> planes_;
};

/// Member of the normalized S^5 family, rho in [0, rho_max(h)].
Immersion from_structure(Scalar h, Scalar rho);

/// Member of the wider Lemma-range family, rho in [0, pi/2].
Immersion from_family(Scalar h, Scalar rho);

/// Raises the target dimension of an m = 1 immersion with the same |H|:
/// S^5 -> S^7 via the frequencies {i eta_1, i eta_2, i}, and S^n -> S^{n+4}
/// otherwise by halving the eta weights and appending a fresh S^5-type pair.
Immersion extend_dimension(const Immersion& im);

}  // namespace cmcflat
