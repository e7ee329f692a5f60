#include "export.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "cmcflat/errors.hpp"
#include "cmcflat/json_io.hpp"

namespace cmcflat::cli {

namespace {

constexpr std::size_t kPcaSampleLimit = 4096;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
  return buf;
}

void require_grid(const GridSpec& g) {
  if (g.nx < 2 || g.ny < 2) throw DomainError("grid needs nx >= 2 and ny >= 2");
  if (!(g.x1 > g.x0) || !(g.y1 > g.y0)) throw DomainError("grid ranges must be increasing");
}

EvalPoint node(const GridSpec& g, int i, int j) {
  return {g.x0 + (g.x1 - g.x0) * i / (g.nx - 1), g.y0 + (g.y1 - g.y0) * j / (g.ny - 1)};
}

std::vector<AmbientVector> samples(const Immersion& im, const GridSpec& g) {
  std::vector<AmbientVector> out;
  out.reserve(static_cast<std::size_t>(g.nx) * static_cast<std::size_t>(g.ny));
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) out.push_back(im.eval(node(g, i, j)));
  return out;
}

// Top three principal directions, each signed so its largest entry is positive.
Eigen::MatrixXd pca_basis(const std::vector<AmbientVector>& pts, std::uint64_t seed, Eigen::VectorXd& mean) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (idx.size() > kPcaSampleLimit) {
    std::vector<std::size_t> chosen;
    std::mt19937_64 rng(seed);
    std::sample(idx.begin(), idx.end(), std::back_inserter(chosen), kPcaSampleLimit, rng);
    idx = std::move(chosen);
  }
  const Eigen::Index dim = pts.front().size();
  mean = Eigen::VectorXd::Zero(dim);
  for (std::size_t k : idx) mean += pts[k];
  mean /= static_cast<double>(idx.size());
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t k : idx) {
    const Eigen::VectorXd c = pts[k] - mean;
    cov += c * c.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  Eigen::MatrixXd basis(dim, 3);
  for (int c = 0; c < 3; ++c) {
    Eigen::VectorXd v = eig.eigenvectors().col(dim - 1 - c);
    Eigen::Index at = 0;
    v.cwiseAbs().maxCoeff(&at);
    if (v[at] < 0) v = -v;
    basis.col(c) = v;
  }
  return basis;
}

}  // namespace

std::string grid_csv(const Immersion& im, const GridSpec& grid) {
  require_grid(grid);
  std::ostringstream os;
  os << "x,y";
  for (std::size_t k = 1; k <= im.ambient_dim(); ++k) os << ",psi_" << k;
  os << "\n";
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const EvalPoint p = node(grid, i, j);
      const AmbientVector v = im.eval(p);
      os << num(p.x) << "," << num(p.y);
      for (Eigen::Index k = 0; k < v.size(); ++k) os << "," << num(v[k]);
      os << "\n";
    }
  }
  return os.str();
}

std::string grid_obj(const Immersion& im, const GridSpec& grid, Projection projection, std::uint64_t seed) {
  require_grid(grid);
  const std::vector<AmbientVector> pts = samples(im, grid);
  std::ostringstream os;
  if (projection == Projection::pca3) {
    Eigen::VectorXd mean;
    const Eigen::MatrixXd basis = pca_basis(pts, seed, mean);
    for (const AmbientVector& p : pts) {
      const Eigen::Vector3d q = basis.transpose() * (p - mean);
      os << "v " << num(q.x()) << " " << num(q.y()) << " " << num(q.z()) << "\n";
    }
  } else {
    for (const AmbientVector& p : pts) os << "v " << num(p[0]) << " " << num(p[1]) << " " << num(p[2]) << "\n";
  }
  for (int j = 0; j + 1 < grid.ny; ++j) {
    for (int i = 0; i + 1 < grid.nx; ++i) {
      const int a = j * grid.nx + i + 1;
      const int b = a + 1;
      const int c = a + grid.nx;
      const int d = c + 1;
      os << "f " << a << " " << b << " " << d << "\n";
      os << "f " << a << " " << d << " " << c << "\n";
    }
  }
  return os.str();
}

std::string fundamental_domain_json(const Lattice2& lat) {
  if (lat.rank() != 2) throw DomainError("fundamental domain needs a rank-2 period lattice");
  const Vec2& v1 = lat.gens()[0];
  const Vec2& v2 = lat.gens()[1];
  Json j;
  j["generators"] = Json::array({vector_json(v1), vector_json(v2)});
  j["polygon"] = Json::array({vector_json(Vec2::Zero()), vector_json(v1), vector_json(v1 + v2), vector_json(v2)});
  j["area"] = round15(std::abs(v1.x() * v2.y() - v1.y() * v2.x()));
  return dump(j);
}

}  // namespace cmcflat::cli
