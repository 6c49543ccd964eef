#include <doctest.h>

#include <algorithm>
#include <set>

#include "simpvol/boundary.hpp"
#include "simpvol/bounds.hpp"
#include "simpvol/face_classes.hpp"
#include "simpvol/generators.hpp"
#include "simpvol/homology.hpp"
#include "simpvol/surfaces.hpp"
#include "simpvol/topology.hpp"

using namespace simpvol;

namespace {

bool is_solid_torus_candidate(const Pseudomanifold& p) {
  if (!is_valid(p) || !orientability(p).orientable() || !manifold_check(p).manifold) return false;
  const SurfaceSummary s = analyze_surface(boundary(p));
  return s.components.size() == 1 && s.components[0].orientable && s.components[0].genus == 1 &&
         homology(p, 1) == HomologyGroup{1, {}};
}

}  // namespace

TEST_CASE("solid torus is one of the self-gluings found by exhaustive search") {
  std::vector<Pseudomanifold> found;
  for (int f1 = 0; f1 < 4; ++f1)
    for (int f2 = f1 + 1; f2 < 4; ++f2) {
      Permutation map = identity_permutation(4);
      do {
        if (map[f1] != f2) continue;
        const Pseudomanifold p(3, 1, {{{0, f1}, {0, f2}, map}});
        if (is_solid_torus_candidate(p)) found.push_back(p);
      } while (std::next_permutation(map.begin(), map.end()));
    }
  CHECK_FALSE(found.empty());
  CHECK(std::find(found.begin(), found.end(), solid_torus()) != found.end());
}

TEST_CASE("cone over the boundary of a simplex is a ball") {
  for (int n = 2; n <= 5; ++n) {
    const Pseudomanifold p = cone_over_simplex_boundary(n);
    CHECK(p.simplex_count() == n + 1);
    CHECK(is_valid(p));
    CHECK(orientability(p).orientable());
    CHECK(euler_characteristic(p) == 1);
    CHECK(boundary(p).simplex_count() == n + 1);
    CHECK(euler_characteristic(boundary(p)) == (n % 2 ? 2 : 0));
  }
  CHECK(manifold_check(cone_over_simplex_boundary(3)).manifold);
}

TEST_CASE("handlebodies") {
  for (int g = 1; g <= 6; ++g) {
    const Pseudomanifold h = handlebody(g);
    CHECK(h.simplex_count() == 3 * g - 2);
    CHECK(orientability(h).orientable());
    CHECK(manifold_check(h).manifold);
    CHECK(euler_characteristic(h) == 1 - g);
    const SurfaceSummary s = analyze_surface(boundary(h));
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0].genus == g);
    CHECK(homology(h, 1) == HomologyGroup{g, {}});
  }
  CHECK_THROWS_AS(handlebody(0), std::invalid_argument);
}

TEST_CASE("add_one_handle rejects glued or repeated faces") {
  const Pseudomanifold t = solid_torus();
  CHECK_THROWS_AS(add_one_handle(t, {0, 0}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(add_one_handle(t, {0, 2}, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(add_one_handle(t, {0, 2}, {3, 0}), std::invalid_argument);
}

TEST_CASE("polygon scheme counts") {
  for (int g = 1; g <= 8; ++g) {
    const PolygonScheme s = polygon_scheme(g);
    CHECK(s.corners == 4 * g);
    CHECK(static_cast<int>(s.quads.size()) == 2 * g - 2);
    CHECK(static_cast<int>(s.triangles.size()) == 2);
    CHECK(static_cast<int>(s.side_pairs.size()) == 2 * g);
    // 4g sides, and one diagonal fewer than there are cells.
    CHECK(static_cast<int>(s.edges.size()) == 4 * g + 2 * g - 1);
    // Identified sides carry matching orientations.
    for (const auto& [k, l] : s.side_pairs) {
      const OrientedEdge e = s.edges[k];
      const int from = s.paired_corner(k, e.from), to = s.paired_corner(k, e.to);
      CHECK(s.points(from, to));
      (void)l;
    }
    // Quads have two opposite sources and two opposite sinks.
    for (const auto& q : s.quads)
      for (int c = 0; c < 4; ++c) {
        const int prev = q[(c + 3) % 4], cur = q[c], next = q[(c + 1) % 4];
        CHECK(s.points(cur, prev) == s.points(cur, next));
      }
    // Triangles are acyclic.
    for (const auto& t : s.triangles) {
      const bool cyclic = (s.points(t[0], t[1]) && s.points(t[1], t[2]) && s.points(t[2], t[0])) ||
                          (s.points(t[1], t[0]) && s.points(t[2], t[1]) && s.points(t[0], t[2]));
      CHECK_FALSE(cyclic);
    }
  }
}

TEST_CASE("product of a surface with an interval") {
  for (int g = 1; g <= 5; ++g) {
    const Pseudomanifold p = product_surface_interval(g);
    CAPTURE(g);
    CHECK(p.simplex_count() == 10 * g - 4);
    CHECK(orientability(p).orientable());
    CHECK(manifold_check(p).manifold);
    CHECK(euler_characteristic(p) == 2 - 2 * g);
    const SurfaceSummary s = analyze_surface(boundary(p));
    REQUIRE(s.components.size() == 2);
    for (const auto& c : s.components) {
      CHECK(c.orientable);
      CHECK(c.genus == g);
      CHECK(c.triangles == 4 * g - 2);
    }
    CHECK(homology(p, 1) == HomologyGroup{2 * g, {}});
    const BoundaryProfile t = boundary_profile(p);
    CHECK(t.t[0] == 2 * g);
    CHECK(t.t[1] == 8 * g - 4);
    CHECK(nice_bad_edges(p).nice == 4 * g);
  }
  CHECK_THROWS_AS(product_surface_interval(0), std::invalid_argument);
}
