#pragma once

#include <cstdint>
#include <string>

#include "cmcflat/immersion.hpp"
#include "cmcflat/lattice.hpp"

namespace cmcflat::cli {

enum class Projection { coords, pca3 };

struct GridSpec {
  int nx = 0;
  int ny = 0;
  double x0 = -kPi;
  double x1 = kPi;
  double y0 = -kPi;
  double y1 = kPi;
};

// Rows "x,y,psi_1,...,psi_N" in row-major order (y outer, x inner).
std::string grid_csv(const Immersion& im, const GridSpec& grid);

// Vertices are the 3D projection of the grid samples; two triangles per cell.
// PCA is for display only: it is not an isometry of anything.
std::string grid_obj(const Immersion& im, const GridSpec& grid, Projection projection, std::uint64_t seed);

// Fundamental parallelogram 0, v1, v1 + v2, v2 and the generators.
std::string fundamental_domain_json(const Lattice2& lat);

}  // namespace cmcflat::cli
