#include <doctest.h>

#include "simpvol/bounds.hpp"
#include "simpvol/generators.hpp"
#include "simpvol/hypervol.hpp"

using namespace simpvol;

namespace {

Rational exact(const BoundReport& r) {
  REQUIRE(r.exact);
  return *r.exact;
}

}  // namespace

TEST_CASE("formula bounds") {
  CHECK(exact(boundary_bound_generic(3, 4)) == 1);
  CHECK(exact(boundary_bound_generic(7, 0)) == 0);
  CHECK(exact(boundary_bound_generic(2, 8)) == Rational(8, 3));
  CHECK(exact(boundary_bound_improved(3, 4)) == 2);
  CHECK(exact(boundary_bound_improved(2, 4)) == 4);
  CHECK(exact(boundary_bound_improved(5, 0)) == 0);
  CHECK(exact(bound_3manifold(4)) == 3);
  CHECK(exact(bound_3manifold(28)) == 21);
  CHECK(exact(bound_aspherical(8, 3)) == 10);
  CHECK(exact(bound_aspherical(Rational(7, 3), 4)) == Rational(7, 3));
  CHECK(exact(bound_aspherical(0, 3)) == 0);
  CHECK(boundary_bound_generic(2, 8).value == doctest::Approx(8.0 / 3));
  CHECK_THROWS_AS(boundary_bound_improved(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(bound_3manifold(-1), std::invalid_argument);
}

TEST_CASE("formula bounds are ordered, monotone and homogeneous") {
  for (int num = 0; num <= 40; ++num)
    for (int den = 1; den <= 6; ++den) {
      const Rational b(num, den);
      CHECK(exact(bound_aspherical(b, 3)) >= exact(bound_3manifold(b)));
      CHECK(exact(bound_3manifold(b)) >= exact(boundary_bound_improved(3, b)));
      CHECK(exact(boundary_bound_improved(3, b)) >= exact(boundary_bound_generic(3, b)));
      CHECK(exact(bound_3manifold(b + 1)) > exact(bound_3manifold(b)));
      CHECK(exact(bound_3manifold(b * 5)) == exact(bound_3manifold(b)) * 5);
    }
}

TEST_CASE("exact values") {
  CHECK(exact(value_handlebody(0)) == 0);
  CHECK(exact(value_handlebody(1)) == 0);
  CHECK(exact(value_handlebody(2)) == 3);
  CHECK(exact(value_handlebody(10)) == 27);
  CHECK(value_handlebody(2).kind == BoundKind::exact);
  CHECK(exact(value_seifert_plus_handles(0)) == 0);
  CHECK(exact(value_seifert_plus_handles(5)) == 15);

  const ProductSurfaceValues v2 = value_product_surface(2);
  CHECK(v2.simplicial_volume == 10);
  CHECK(v2.delta_complexity == 16);
  CHECK(v2.stable_delta_complexity == 10);
  CHECK(value_product_surface(1).delta_complexity == 6);
  CHECK(value_product_surface(1).simplicial_volume == 0);
  CHECK(value_product_surface(6).delta_complexity == 56);
  CHECK_THROWS_AS(value_product_surface(0), std::invalid_argument);
}

TEST_CASE("nice and bad edges") {
  const EdgeCensus cone = nice_bad_edges(cone_over_simplex_boundary(3));
  CHECK(cone.nice == 0);
  CHECK(cone.bad == 6);

  const EdgeCensus free_simplex = nice_bad_edges(Pseudomanifold(3, 1));
  CHECK(free_simplex.nice == 0);
  CHECK(free_simplex.bad == 6);

  const EdgeCensus m2 = nice_bad_edges(product_surface_interval(2));
  CHECK(m2.nice >= 8);
  CHECK(m2.nice + m2.bad == 18);
}

TEST_CASE("bad edge diagnostic") {
  // Around each boundary edge of the cone, the two boundary faces sit in
  // simplices that share a face, so every check finds a direct gluing.
  const auto cone = check_bad_edge_lemma(cone_over_simplex_boundary(3));
  CHECK(cone.size() == 6);
  for (const auto& c : cone) {
    CHECK(c.pass);
    CHECK(c.steps == 1);
  }

  const auto pair = check_bad_edge_lemma(Pseudomanifold(3, 2, {{{0, 0}, {1, 0}, {0, 1, 2, 3}}}));
  CHECK(pair.size() == 9);

  // Frozen on the product triangulations: every bad edge is crossed directly.
  for (int g = 1; g <= 4; ++g) {
    const auto checks = check_bad_edge_lemma(product_surface_interval(g));
    CHECK(static_cast<int>(checks.size()) == nice_bad_edges(product_surface_interval(g)).bad);
    for (const auto& c : checks) CHECK(c.pass);
  }
}

TEST_CASE("admissibility") {
  for (int g = 1; g <= 5; ++g) CHECK(admissibility_check(product_surface_interval(g)).pass);
  CHECK(admissibility_check(cone_over_simplex_boundary(3)).pass);
  const AdmissibilityReport single = admissibility_check(Pseudomanifold(3, 1));
  CHECK_FALSE(single.pass);
  CHECK(single.witnesses.size() == 1);
}

TEST_CASE("counting certificate") {
  for (int g = 2; g <= 6; ++g) {
    const CountingCertificate c = counting_certificate(product_surface_interval(g), 1, 8 * g - 8, 2);
    CAPTURE(g);
    CHECK(c.all_pass());
    CHECK(c.inequalities.size() == 6);
    CHECK(c.t[0] == 2 * g);
    CHECK(c.t[1] == 8 * g - 4);
    // The nice-edge and interior-simplex inequalities are equalities here.
    CHECK(c.inequalities[4].lhs == c.inequalities[4].rhs);
    CHECK(c.inequalities[5].lhs == c.inequalities[5].rhs);
    CHECK(c.dual_graph_euler_characteristic * 2 == -2 * c.t[0] - c.t[1]);
  }
  CHECK(counting_certificate(cone_over_simplex_boundary(3), 1, 0, 1).inequalities[0].pass);

  // Diagnostic only: record the pattern on a handlebody.
  const CountingCertificate h = counting_certificate(handlebody(3), 1, 8, 1);
  CHECK(h.t == std::vector<int>{2, 0, 5, 0, 0});
  for (std::size_t k = 0; k < 5; ++k) CHECK(h.inequalities[k].pass);
  CHECK_FALSE(h.inequalities[5].pass);
  CHECK_FALSE(admissibility_check(handlebody(3)).pass);

  CHECK_THROWS_AS(counting_certificate(disjoint_union(solid_torus(), solid_torus()), 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(counting_certificate(Pseudomanifold(2, 1), 1, 0, 1), std::invalid_argument);
}

TEST_CASE("best lower bound") {
  ManifoldDescriptor m;
  m.dimension = 3;
  m.boundary_norm = 4;
  BoundReport b = best_lower_bound(m);
  CHECK(b.value == 3);
  CHECK(b.source == "three-manifold");

  m.aspherical = m.boundary_irreducible = true;
  b = best_lower_bound(m);
  CHECK(b.value == 5);
  CHECK(b.source == "aspherical");

  ManifoldDescriptor h;
  h.dimension = 3;
  h.boundary_norm = 4;
  h.hyperbolic_geodesic_boundary = true;
  h.volume = 6.452;
  b = best_lower_bound(h);
  CHECK(b.source == "hyperbolic");
  CHECK(b.value == doctest::Approx(6.462).epsilon(2e-4));
  for (const auto& r : applicable_bounds(h)) CHECK(b.value >= r.value);

  h.volume.reset();
  CHECK_THROWS_AS(best_lower_bound(h), std::invalid_argument);
  ManifoldDescriptor low;
  low.dimension = 1;
  CHECK_THROWS_AS(best_lower_bound(low), std::invalid_argument);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("4") == 4);
  CHECK(parse_rational("8/3") == Rational(8, 3));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(to_string(Rational(8, 3)) == "8/3");
  CHECK(to_string(Rational(6)) == "6");
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("json reports keep field order") {
  const Json j = to_json(bound_3manifold(4));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"value", "exact", "kind", "source", "hypotheses"});
  const Json c = to_json(counting_certificate(product_surface_interval(2), 1, 8, 2));
  CHECK(c["all_pass"] == true);
  CHECK(c["inequalities"].size() == 6);
}
