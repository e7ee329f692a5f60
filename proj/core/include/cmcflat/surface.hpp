#pragma once

#include <cstddef>

#include "cmcflat/types.hpp"

namespace cmcflat {

// A smooth map R^2 -> R^{N} with analytic partial derivatives, viewed as a
// surface in the unit sphere S^{N-1}. The geometry verifier works on this
// interface so that it can also be exercised on test fixtures.
class SurfaceMap {
 public:
  virtual ~SurfaceMap() = default;

  virtual std::size_t ambient_dim() const = 0;
  virtual int max_derivative_order() const = 0;

  // d^{dx+dy} / dx^dx dy^dy of the map at p.
  virtual AmbientVector partial(const EvalPoint& p, int dx, int dy) const = 0;

  AmbientVector eval(const EvalPoint& p) const { return partial(p, 0, 0); }

  // The map evaluated in extended precision, used by finite-difference
  // oracles whose stencils divide by step^4. The default only widens eval().
  virtual ExtendedVector eval_extended(const Quad& x, const Quad& y) const {
    const AmbientVector v = eval(EvalPoint{static_cast<Scalar>(x), static_cast<Scalar>(y)});
    return ExtendedVector(v.data(), v.data() + v.size());
  }
};

}  // namespace cmcflat
