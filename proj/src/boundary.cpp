#include "simpvol/boundary.hpp"

#include <map>
#include <stdexcept>

namespace simpvol {

BoundaryComplex boundary_with_origin(const Pseudomanifold& p) {
  const GluingTable table(p);
  const int n = p.dimension();
  if (n < 2) throw std::invalid_argument("boundary: dimension must be at least 2");

  std::vector<FaceRef> origin;
  std::map<FaceRef, int> index;
  for (int i = 0; i < p.simplex_count(); ++i)
    for (int j = 0; j <= n; ++j)
      if (table.is_boundary({i, j})) {
        index[{i, j}] = static_cast<int>(origin.size());
        origin.push_back({i, j});
      }

  const long long step_limit = static_cast<long long>(p.simplex_count()) * (n + 1) * n + 1;
  std::vector<Gluing> gluings;
  std::map<std::pair<FaceRef, FaceRef>, RidgeWalk> walk_of;

  for (int t = 0; t < static_cast<int>(origin.size()); ++t) {
    const auto [i, j] = origin[t];
    for (int v = 0; v <= n; ++v) {
      if (v == j) continue;
      // Ridge = all vertices except {j, v}; entered through a, leaving through b.
      int s = i, a = j, b = v;
      Permutation phi = identity_permutation(n + 1);
      RidgeWalk walk{{i, v}, {i, v}, 0};
      while (const auto& nb = table.neighbour({s, b})) {
        const int next_a = nb->face.face;
        const int next_b = nb->map[a];
        phi = compose(nb->map, phi);
        s = nb->face.simplex;
        a = next_a;
        b = next_b;
        walk.last_entry = {s, a};
        if (++walk.steps > step_limit)
          throw TopologyError("boundary: ridge walk around simplex " + std::to_string(i) + " face " +
                              std::to_string(j) + " does not close");
      }
      const int u = index.at({s, b});
      const FaceRef here{t, local_label(v, j)};
      const FaceRef there{u, local_label(a, b)};
      if (here == there)
        throw TopologyError("boundary: ridge of boundary face " + std::to_string(t) + " paired with itself");
      if (there < here) continue;  // recorded from the other side

      Permutation local_map(static_cast<std::size_t>(n));
      for (int x = 0; x <= n; ++x) {
        if (x == j) continue;
        const int image = x == v ? a : phi[x];
        local_map[local_label(x, j)] = local_label(image, b);
      }
      gluings.push_back({here, there, local_map});
      walk_of[{here, there}] = walk;
    }
  }

  Pseudomanifold complex(n - 1, static_cast<int>(origin.size()), std::move(gluings));
  std::vector<RidgeWalk> walks;
  walks.reserve(complex.gluing_count());
  for (const auto& g : complex.gluings()) walks.push_back(walk_of.at({g.a, g.b}));
  return BoundaryComplex{std::move(complex), std::move(origin), std::move(walks)};
}

Pseudomanifold boundary(const Pseudomanifold& p) { return boundary_with_origin(p).complex; }

Face lift_to_interior(const BoundaryComplex& b, const Face& boundary_face) {
  const FaceRef origin = b.origin.at(static_cast<std::size_t>(boundary_face.simplex));
  VertexSet lifted = 0;
  for (int x : members(boundary_face.vertices)) lifted |= bit(global_label(x, origin.face));
  return {origin.simplex, lifted};
}

}  // namespace simpvol
