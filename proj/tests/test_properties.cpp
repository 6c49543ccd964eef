#include <doctest.h>

#include <random>

#include "simpvol/boundary.hpp"
#include "simpvol/face_classes.hpp"
#include "simpvol/json_io.hpp"
#include "simpvol/surfaces.hpp"
#include "support.hpp"

using namespace simpvol;

TEST_CASE("random gluings") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_real_distribution<double> density(0.2, 1.0);
  int instances = 0;
  while (instances < 500) {
    const int n = instances % 4 == 0 ? 4 : 3;
    const Pseudomanifold p = testing::random_pseudomanifold(rng, n, size(rng), density(rng));
    if (!is_valid(p)) continue;
    ++instances;
    CAPTURE(dump_triangulation(p));

    const BoundaryComplex b = boundary_with_origin(p);
    CHECK(boundary(b.complex).simplex_count() == 0);
    CHECK(boundary_profile(p).boundary_face_count() == b.complex.simplex_count());
    CHECK(parse_triangulation(dump_triangulation(p)) == p);

    if (n == 3 && orientability(p).orientable()) {
      for (const auto& c : analyze_surface(b.complex).components) {
        CHECK(c.orientable);
        CHECK(c.euler_characteristic % 2 == 0);
      }
    }
  }
}
