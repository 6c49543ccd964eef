#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simpvol/pseudomanifold.hpp"

namespace simpvol {

using Rational = boost::multiprecision::cpp_rational;

struct SurfaceComponent {
  int euler_characteristic = 0;
  bool orientable = true;
  /// (2 − χ)/2 when orientable, 2 − χ (nonorientable genus) otherwise.
  int genus = 0;
  int triangles = 0;
};

struct SurfaceSummary {
  std::vector<SurfaceComponent> components;
};

/// Classifies each component of a closed 2-dimensional pseudomanifold.
SurfaceSummary analyze_surface(const Pseudomanifold& p);

/// Σ max{0, −2χ} over the components.
Rational surface_simplicial_volume(const SurfaceSummary& s);

/// Minimal number of triangles in a loose triangulation of the closed
/// orientable surface of the given genus: 4g − 2, and 2 for the sphere.
int surface_delta_complexity(int genus, bool orientable = true);

}  // namespace simpvol
