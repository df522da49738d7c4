// mesh.hpp
// Grid sampling of the immersions and OBJ/CSV export.  OBJ carries the first
// three ambient coordinates per vertex (the rest ride in a comment) plus the
// periodic triangulation; CSV carries the full coordinate vector.

#ifndef LAWSON_MESH_HPP
#define LAWSON_MESH_HPP

#include <string>
#include <vector>

#include "lawson/surfaces.hpp"

namespace lawson {

struct MeshGrid {
  int nx = 0, ny = 0;
  int dim = 0;
  std::vector<double> u, v;          // per-vertex parameter values, size nx*ny
  std::vector<AmbientPoint> points;  // row-major: index i + nx*j
};

// Samples f on the uniform grid (2 pi i / nx, 2 pi j / ny).  The surfaces
// are 2 pi periodic in both arguments, so the right/top edges are omitted
// and faces stitch around.  Throws InvalidParams when nx or ny < 4.
MeshGrid sample_surface(const SurfaceFn& f, int dim, int nx, int ny);

// Header "x_param,y_param,c1,c2,c3,c4,c5,c6"; 4-slot points pad c5, c6 with
// zeros.  17 significant digits.
std::string mesh_to_csv(const MeshGrid& grid);

// "v c1 c2 c3 # extra..." per vertex, then 2 nx ny triangular faces with
// wraparound indices.
std::string mesh_to_obj(const MeshGrid& grid);

}  // namespace lawson

#endif
