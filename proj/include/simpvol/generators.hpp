#pragma once

#include <array>
#include <vector>

#include "simpvol/pseudomanifold.hpp"

namespace simpvol {

/// Cone from the barycenter over ∂Δⁿ: n+1 simplices, each with one free face.
/// In simplex i the label i is the cone point; label k ≠ i is the k-th vertex of Δⁿ.
Pseudomanifold cone_over_simplex_boundary(int n);

/// One tetrahedron with two faces glued: a solid torus.
Pseudomanifold solid_torus();

/// Appends a three-tetrahedron prism T×[0,1] and glues T×{0} to `face_a` and
/// T×{1} to `face_b`. When P is orientable the top attaching map is chosen to
/// keep the result orientable.
Pseudomanifold add_one_handle(const Pseudomanifold& p, FaceRef face_a, FaceRef face_b);

/// Genus-g handlebody with 3g − 2 tetrahedra: the solid torus plus g − 1 handles.
Pseudomanifold handlebody(int genus);

struct OrientedEdge {
  int from = 0;
  int to = 0;
};

/// Cell decomposition of the 4g-gon whose sides are identified by the word
/// x_1 … x_{2g} x_1⁻¹ … x_{2g}⁻¹, with every edge oriented.
///
/// Side k joins corners k and k+1 (mod 4g). Side k (k < 2g) is identified with
/// side 2g+k, corner k going to corner 2g+k+1 and corner k+1 to corner 2g+k.
/// Quads are listed in cyclic order and oriented with two opposite sources and
/// two opposite sinks; triangles are oriented acyclically.
struct PolygonScheme {
  int genus = 0;
  int corners = 0;
  std::vector<std::array<int, 4>> quads;
  std::vector<std::array<int, 3>> triangles;
  /// (k, 2g + k) for k < 2g.
  std::vector<std::array<int, 2>> side_pairs;
  /// Sides first (index = side number), then the diagonals.
  std::vector<OrientedEdge> edges;

  /// True iff the edge {x, y} is oriented from x to y.
  bool points(int x, int y) const;
  /// Image of a corner of side `side` under the side identification.
  int paired_corner(int side, int corner) const;
};

PolygonScheme polygon_scheme(int genus);

/// Triangulation of S_g × [0,1] with (2g − 2)·5 + 2·3 tetrahedra: five per
/// square cell and three per triangular cell of the polygon scheme.
Pseudomanifold product_surface_interval(int genus);

}  // namespace simpvol
