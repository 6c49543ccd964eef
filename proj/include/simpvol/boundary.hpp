#pragma once

#include <vector>

#include "simpvol/face_classes.hpp"
#include "simpvol/pseudomanifold.hpp"

namespace simpvol {

/// How one ridge pairing of the boundary was found: the walk left the first
/// boundary face's simplex through `first_exit`, crossed `steps` gluings, and
/// entered the simplex of the second boundary face through `last_entry`.
/// With steps == 1, first_exit and last_entry are glued directly.
struct RidgeWalk {
  FaceRef first_exit;
  FaceRef last_entry;
  int steps = 0;
};

struct BoundaryComplex {
  /// The boundary pseudomanifold; simplex t is the unglued face origin[t] of P.
  Pseudomanifold complex;
  std::vector<FaceRef> origin;
  /// Aligned with complex.gluings().
  std::vector<RidgeWalk> walks;
};

/// Boundary pseudomanifold with provenance. Ridges of unglued faces are paired
/// by rotating around them through the glued simplices until the next unglued
/// face is reached; the identification is the composite of the crossed maps.
BoundaryComplex boundary_with_origin(const Pseudomanifold& p);

Pseudomanifold boundary(const Pseudomanifold& p);

/// The face of P a face of the boundary complex comes from.
Face lift_to_interior(const BoundaryComplex& b, const Face& boundary_face);

}  // namespace simpvol
