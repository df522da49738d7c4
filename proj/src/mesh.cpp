// mesh.cpp

#include "lawson/mesh.hpp"

#include <cstdio>
#include <numbers>

#include "lawson/errors.hpp"

namespace lawson {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

MeshGrid sample_surface(const SurfaceFn& f, int dim, int nx, int ny) {
  if (nx < 4 || ny < 4) throw InvalidParams("mesh needs nx, ny >= 4");
  MeshGrid grid;
  grid.nx = nx;
  grid.ny = ny;
  grid.dim = dim;
  grid.u.reserve(static_cast<std::size_t>(nx) * ny);
  grid.v.reserve(static_cast<std::size_t>(nx) * ny);
  grid.points.reserve(static_cast<std::size_t>(nx) * ny);
  const double step_u = 2.0 * std::numbers::pi / nx;
  const double step_v = 2.0 * std::numbers::pi / ny;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      grid.u.push_back(i * step_u);
      grid.v.push_back(j * step_v);
      grid.points.push_back(f(i * step_u, j * step_v));
    }
  return grid;
}

std::string mesh_to_csv(const MeshGrid& grid) {
  std::string out = "x_param,y_param,c1,c2,c3,c4,c5,c6\n";
  for (std::size_t n = 0; n < grid.points.size(); ++n) {
    out += fmt17(grid.u[n]) + ',' + fmt17(grid.v[n]);
    const AmbientPoint& p = grid.points[n];
    for (int k = 0; k < 6; ++k) out += ',' + fmt17(k < p.dim ? p[k] : 0.0);
    out += '\n';
  }
  return out;
}

std::string mesh_to_obj(const MeshGrid& grid) {
  std::string out;
  for (const AmbientPoint& p : grid.points) {
    out += "v " + fmt17(p[0]) + ' ' + fmt17(p[1]) + ' ' + fmt17(p[2]);
    if (p.dim > 3) {
      out += " #";
      for (int k = 3; k < p.dim; ++k) out += ' ' + fmt17(p[k]);
    }
    out += '\n';
  }
  const auto vid = [&grid](int i, int j) {
    return 1 + (i % grid.nx) + grid.nx * (j % grid.ny);
  };
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      out += "f " + std::to_string(vid(i, j)) + ' ' + std::to_string(vid(i + 1, j)) + ' ' +
             std::to_string(vid(i + 1, j + 1)) + '\n';
      out += "f " + std::to_string(vid(i, j)) + ' ' + std::to_string(vid(i + 1, j + 1)) + ' ' +
             std::to_string(vid(i, j + 1)) + '\n';
    }
  return out;
}

}  // namespace lawson
