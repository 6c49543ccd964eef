#pragma once

#include <vector>

#include "simpvol/face_classes.hpp"
#include "simpvol/pseudomanifold.hpp"

namespace simpvol {

/// The (n-1)-dimensional pseudomanifold formed by the corners of all simplices
/// at one vertex class. Corner (i, v) is the small simplex cut off near vertex v
/// of simplex i; its vertices are the other vertices of simplex i in ascending order.
struct VertexLink {
  int vertex_class = 0;
  Pseudomanifold link;
  /// corners[c] = (simplex, vertex) of P giving link simplex c.
  std::vector<Face> corners;
};

VertexLink vertex_link(const Pseudomanifold& p, const FaceClassTable& classes, int vertex_class);

struct VertexLinkSummary {
  int vertex_class = 0;
  int euler_characteristic = 0;
  bool connected = false;
  bool on_boundary = false;
  /// Every vertex of the link has a connected link itself.
  bool link_is_surface = false;
};

/// Link data for every vertex class of a 3-dimensional pseudomanifold.
std::vector<VertexLinkSummary> vertex_links(const Pseudomanifold& p);

struct ManifoldCheck {
  bool manifold = false;
  std::vector<VertexLinkSummary> links;
  /// Edge classes identified with themselves reversed; each is a singular point.
  int folded_edges = 0;
};

/// For dimension 3: every interior vertex link is a sphere, every boundary
/// vertex link a disk, and no edge is folded onto itself.
ManifoldCheck manifold_check(const Pseudomanifold& p);

/// Genus of the handlebody left after removing neighbourhoods of the vertices
/// and edges of a connected 3-dimensional pseudomanifold: 1 − χ(dual graph).
int handlebody_genus(const Pseudomanifold& p);

}  // namespace simpvol
