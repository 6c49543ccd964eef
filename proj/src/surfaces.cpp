#include "simpvol/surfaces.hpp"

#include <algorithm>
#include <stdexcept>

#include "simpvol/face_classes.hpp"

namespace simpvol {

SurfaceSummary analyze_surface(const Pseudomanifold& p) {
  require_valid(p);
  if (p.dimension() != 2) throw std::invalid_argument("analyze_surface: dimension must be 2");
  if (static_cast<int>(2 * p.gluing_count()) != 3 * p.simplex_count())
    throw std::invalid_argument("analyze_surface: surface has boundary edges");

  SurfaceSummary summary;
  for (const auto& component : connected_components(p)) {
    SurfaceComponent c;
    c.euler_characteristic = euler_characteristic(component);
    c.orientable = orientability(component).orientable();
    c.genus = c.orientable ? (2 - c.euler_characteristic) / 2 : 2 - c.euler_characteristic;
    c.triangles = component.simplex_count();
    summary.components.push_back(c);
  }
  return summary;
}

Rational surface_simplicial_volume(const SurfaceSummary& s) {
  Rational total = 0;
  for (const auto& c : s.components) total += std::max(0, -2 * c.euler_characteristic);
  return total;
}

int surface_delta_complexity(int genus, bool orientable) {
  if (!orientable) throw std::invalid_argument("surface_delta_complexity: only orientable surfaces are supported");
  if (genus < 0) throw std::invalid_argument("surface_delta_complexity: negative genus");
  return genus == 0 ? 2 : 4 * genus - 2;
}

}  // namespace simpvol
