#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <complex>
#include <numbers>
#include <vector>

namespace cmcflat {

using Scalar = double;
using Complex = std::complex<double>;

// Point of the parameter plane R^2 (z = x + iy).
struct EvalPoint {
  Scalar x = 0.0;
  Scalar y = 0.0;
};

using Vec2 = Eigen::Vector2d;
using AmbientVector = Eigen::VectorXd;
// 113-bit binary float for finite-difference stencils.
using Quad = boost::multiprecision::cpp_bin_float_quad;
using ExtendedVector = std::vector<Quad>;

inline constexpr Scalar kPi = std::numbers::pi;

// Default tolerances for the two verification tiers.
inline constexpr Scalar kGeometricTolerance = 1e-9;
inline constexpr Scalar kFiniteDifferenceTolerance = 1e-5;

}  // namespace cmcflat
