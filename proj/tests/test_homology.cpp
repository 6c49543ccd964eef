#include <doctest.h>

#include <random>

#include "simpvol/face_classes.hpp"
#include "simpvol/generators.hpp"
#include "simpvol/homology.hpp"
#include "simpvol/surfaces.hpp"
#include "support.hpp"

using namespace simpvol;

namespace {

HomologyGroup free_group(int rank) { return {rank, {}}; }

// Every closed surface made of two triangles.
std::vector<Pseudomanifold> two_triangle_surfaces() {
  std::vector<Pseudomanifold> out;
  const FaceRef edges[6] = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
  // Perfect matchings of the six edges.
  std::vector<std::vector<std::pair<int, int>>> matchings;
  auto rec = [&](auto&& self, std::vector<int> left, std::vector<std::pair<int, int>> acc) -> void {
    if (left.empty()) {
      matchings.push_back(acc);
      return;
    }
    const int first = left[0];
    for (std::size_t k = 1; k < left.size(); ++k) {
      std::vector<int> rest;
      for (std::size_t q = 1; q < left.size(); ++q)
        if (q != k) rest.push_back(left[q]);
      auto next = acc;
      next.push_back({first, left[k]});
      self(self, rest, next);
    }
  };
  rec(rec, {0, 1, 2, 3, 4, 5}, {});
  for (const auto& m : matchings)
    for (int flips = 0; flips < 8; ++flips) {
      std::vector<Gluing> gluings;
      for (int k = 0; k < 3; ++k) {
        const FaceRef a = edges[m[k].first], b = edges[m[k].second];
        std::vector<int> rest_to;
        for (int v = 0; v < 3; ++v)
          if (v != b.face) rest_to.push_back(v);
        if (flips >> k & 1) std::swap(rest_to[0], rest_to[1]);
        Permutation map(3);
        map[a.face] = b.face;
        int q = 0;
        for (int v = 0; v < 3; ++v)
          if (v != a.face) map[v] = rest_to[q++];
        gluings.push_back({a, b, map});
      }
      out.emplace_back(2, 2, gluings);
    }
  return out;
}

}  // namespace

TEST_CASE("smith normal form") {
  IntegerMatrix m{{2, 4}, {6, 8}};
  const SmithForm s = smith_normal_form(m);
  CHECK(s.rank == 2);
  CHECK(s.invariant_factors == std::vector<BigInt>{2, 4});

  const SmithForm z = smith_normal_form({{0, 0}, {0, 0}});
  CHECK(z.rank == 0);
  const SmithForm r = smith_normal_form({{1, 2, 3}, {2, 4, 6}});
  CHECK(r.rank == 1);
  CHECK(r.invariant_factors == std::vector<BigInt>{1});
}

TEST_CASE("boundary of boundary vanishes") {
  for (const auto& p : {product_surface_interval(2), handlebody(2), cone_over_simplex_boundary(3)}) {
    for (int d = 2; d <= 3; ++d) {
      const IntegerMatrix hi = boundary_matrix(p, d), lo = boundary_matrix(p, d - 1);
      for (std::size_t r = 0; r < lo.size(); ++r)
        for (std::size_t c = 0; c < (hi.empty() ? 0 : hi[0].size()); ++c) {
          BigInt sum = 0;
          for (std::size_t k = 0; k < hi.size(); ++k) sum += lo[r][k] * hi[k][c];
          CHECK(sum == 0);
        }
    }
  }
}

TEST_CASE("homology of generated 3-manifolds") {
  CHECK(homology(cone_over_simplex_boundary(3), 1) == free_group(0));
  CHECK(homology(cone_over_simplex_boundary(3), 0) == free_group(1));
  CHECK(homology(solid_torus(), 1) == free_group(1));
  CHECK(homology(handlebody(3), 1) == free_group(3));
  CHECK(homology(handlebody(3), 2) == free_group(0));
  CHECK(homology(product_surface_interval(2), 1) == free_group(4));
  CHECK(homology(product_surface_interval(2), 2) == free_group(1));
  CHECK(homology(product_surface_interval(2), 3) == free_group(0));
}

TEST_CASE("two-triangle surfaces match the classification") {
  int checked = 0;
  for (const auto& p : two_triangle_surfaces()) {
    REQUIRE(is_valid(p));
    const auto summary = analyze_surface(p);
    if (summary.components.size() != 1) continue;
    const SurfaceComponent c = summary.components[0];
    HomologyGroup expected_h1, expected_h2;
    if (c.orientable) {
      expected_h1 = free_group(2 * c.genus);
      expected_h2 = free_group(1);
    } else {
      expected_h1 = {c.genus - 1, {2}};
      expected_h2 = free_group(0);
    }
    CHECK(homology(p, 1) == expected_h1);
    CHECK(homology(p, 2) == expected_h2);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("projective plane has torsion") {
  bool found = false;
  for (const auto& p : two_triangle_surfaces()) {
    if (euler_characteristic(p) != 1) continue;
    CHECK(homology(p, 1) == HomologyGroup{0, {2}});
    found = true;
  }
  CHECK(found);
}

TEST_CASE("subdivision preserves homology and makes every class rigid") {
  std::mt19937 rng(7);
  int nonrigid = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Pseudomanifold p = testing::random_pseudomanifold(rng, trial % 2 ? 3 : 2, 1 + trial % 2, 0.9);
    REQUIRE(is_valid(p));
    const Pseudomanifold sd = barycentric_subdivision(p);
    CHECK(FaceClassTable(sd).all_rigid());
    nonrigid += FaceClassTable(p).all_rigid() ? 0 : 1;
    CHECK(euler_characteristic(sd) == euler_characteristic(p));
    for (int d = 0; d <= p.dimension(); ++d) CHECK(homology(sd, d) == homology(p, d));
  }
  CHECK(nonrigid > 0);
}
