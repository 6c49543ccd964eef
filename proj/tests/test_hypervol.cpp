#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "lobachevsky_oracle.hpp"
#include "simpvol/hypervol.hpp"

using namespace simpvol;
using std::numbers::pi;
using testing::lobachevsky_oracle;

namespace {

double lobachevsky_fourier(double theta, int terms) {
  double sum = 0;
  for (int k = 1; k <= terms; ++k) sum += std::sin(2 * k * theta) / (double(k) * k);
  return sum / 2;
}

}  // namespace

TEST_CASE("constants") {
  const HypConstants& h = hyp_constants();
  CHECK(std::abs(h.catalan - 0.915965594177219) < 1e-13);
  CHECK(std::abs(h.v3 - 1.014941606409653) < 1e-13);
  CHECK(h.v2 == doctest::Approx(pi));
  CHECK(h.thm_f_coefficient > 0.0407);
  CHECK(h.thm_f_coefficient < 0.0409);
  CHECK(catalan() > 0.9);
  CHECK(catalan() < h.v3);
}

TEST_CASE("lobachevsky special values and symmetries") {
  CHECK(lobachevsky(0) == 0);
  CHECK(std::abs(lobachevsky(pi / 2)) < 1e-11);
  CHECK(std::abs(lobachevsky(pi)) < 1e-11);
  CHECK(lobachevsky(pi / 3) == doctest::Approx(0.338314).epsilon(1e-6));
  CHECK(std::abs(2 * lobachevsky(pi / 4) - catalan()) < 1e-10);
  for (double t = -7; t <= 7; t += 0.173) {
    CHECK(std::abs(lobachevsky(-t) + lobachevsky(t)) < 1e-11);
    CHECK(std::abs(lobachevsky(t + pi) - lobachevsky(t)) < 1e-11);
    CHECK(std::abs(lobachevsky(2 * t) - 2 * lobachevsky(t) - 2 * lobachevsky(t + pi / 2)) < 1e-10);
  }
  CHECK_THROWS_AS(lobachevsky(INFINITY), std::invalid_argument);
}

TEST_CASE("lobachevsky agrees with quadrature and Fourier series") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> angle(-10, 10);
  for (int k = 0; k < 100; ++k) {
    const double t = angle(rng);
    CAPTURE(t);
    CHECK(std::abs(lobachevsky(t) - lobachevsky_oracle(t)) < 1e-9);
  }
  for (double t : {0.1, 0.7, 1.3, 2.9}) CHECK(std::abs(lobachevsky(t) - lobachevsky_fourier(t, 200000)) < 1e-5);
}

TEST_CASE("ideal tetrahedra") {
  const HypConstants& h = hyp_constants();
  CHECK(ideal_tetrahedron_volume(pi / 3, pi / 3, pi / 3) == doctest::Approx(h.v3).epsilon(1e-12));
  CHECK(ideal_tetrahedron_volume(pi / 2, pi / 4, pi / 4) == doctest::Approx(h.catalan).epsilon(1e-12));
  CHECK(ideal_tetrahedron_volume(pi - 2e-4, 1e-4, 1e-4) < 0.01);
  CHECK_THROWS_AS(ideal_tetrahedron_volume(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ideal_tetrahedron_volume(pi, 0, 0), std::invalid_argument);

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 1000; ++k) {
    const double a = u(rng), b = u(rng) * (1 - a);
    const double alpha = pi * a, beta = pi * b, gamma = pi - alpha - beta;
    if (alpha <= 0 || beta <= 0 || gamma <= 0) continue;
    CHECK(ideal_tetrahedron_volume(alpha, beta, gamma) <= h.v3 + 1e-12);
  }
}

TEST_CASE("ideal tetrahedra from vertices") {
  const auto inf = ExtendedComplex::infinity();
  CHECK(ideal_volume_from_vertices(0.0, 1.0, inf, std::polar(1.0, pi / 3)) ==
        doctest::Approx(ideal_tetrahedron_volume(pi / 3, pi / 3, pi / 3)).epsilon(1e-12));
  CHECK(ideal_volume_from_vertices(0.0, 1.0, inf, 0.5) == 0);
  CHECK(ideal_volume_from_vertices(0.0, 1.0, inf, std::complex<double>(0, 1)) ==
        doctest::Approx(ideal_tetrahedron_volume(pi / 2, pi / 4, pi / 4)).epsilon(1e-12));
  // Orientation does not matter.
  CHECK(ideal_volume_from_vertices(0.0, 1.0, inf, std::complex<double>(0, -1)) ==
        doctest::Approx(hyp_constants().catalan).epsilon(1e-12));
  // Möbius invariance: apply z ↦ (2z + 1)/(z + 3) to the regular vertices.
  auto moebius = [](ExtendedComplex z) -> ExtendedComplex {
    if (z.infinite) return {2.0};
    return {(2.0 * z.value + 1.0) / (z.value + 3.0)};
  };
  CHECK(ideal_volume_from_vertices(moebius(0.0), moebius(1.0), moebius(inf), moebius(std::polar(1.0, pi / 3))) ==
        doctest::Approx(hyp_constants().v3).epsilon(1e-10));
  CHECK_THROWS_AS(ideal_volume_from_vertices(0.0, 1.0, inf, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ideal_volume_from_vertices(inf, 1.0, inf, 2.0), std::invalid_argument);
}

TEST_CASE("gauss legendre rules") {
  for (int n : {1, 2, 5, 16, 64}) {
    const GaussLegendreRule r = gauss_legendre(n);
    double w = 0, x2 = 0;
    for (int k = 0; k < n; ++k) {
      w += r.weights[k];
      x2 += r.weights[k] * r.nodes[k] * r.nodes[k];
    }
    CHECK(w == doctest::Approx(2).epsilon(1e-13));
    if (n >= 2) CHECK(x2 == doctest::Approx(2.0 / 3).epsilon(1e-13));
  }
}

TEST_CASE("regular truncated tetrahedra") {
  CHECK(regular_truncated_volume(2) == doctest::Approx(3.2261).epsilon(5e-4 / 3.2261));
  CHECK(regular_truncated_volume(3) == doctest::Approx(3.4763).epsilon(5e-4 / 3.4763));
  CHECK(regular_truncated_volume(4) == doctest::Approx(3.5595).epsilon(5e-4 / 3.5595));

  // Independent quadrature of the same integral.
  for (int g : {2, 3, 7, 50}) {
    auto f = [](double t) { return std::acosh(std::max(1.0, std::cos(t) / (2 * std::cos(t) - 1))); };
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0, pi / (3 * g), 15, 1e-14);
    CHECK(std::abs(regular_truncated_volume(g) - (8 * lobachevsky_oracle(pi / 4) - 3 * integral)) < 1e-10);
  }

  const double cap = 4 * hyp_constants().catalan;
  double previous = 0;
  for (int g = 2; g <= 200; ++g) {
    const double v = regular_truncated_volume(g);
    CHECK(v > previous);
    CHECK(v < cap);
    previous = v;
  }
  CHECK_THROWS_AS(regular_truncated_volume(1), std::invalid_argument);
}

TEST_CASE("volume bounds") {
  const HypConstants& h = hyp_constants();
  CHECK(jungreis_bound(h.v3) == doctest::Approx(1));
  CHECK(jungreis_bound(2 * regular_truncated_volume(2)) == doctest::Approx(6.357).epsilon(2e-3 / 6.357));
  CHECK(thm_f_bound(2 * regular_truncated_volume(2), 4) == doctest::Approx(6.461).epsilon(2e-3 / 6.461));
  CHECK(thm_f_bound(3 * regular_truncated_volume(3), 8) == doctest::Approx(10.882).epsilon(2e-3 / 10.882));
  CHECK(thm_f_bound(100, 4) == jungreis_bound(100));
  for (double vol = 0.5; vol < 40; vol += 0.7)
    for (double b = 0; b < 12; b += 0.5) {
      const double f = thm_f_bound(vol, b), j = jungreis_bound(vol);
      CHECK(f >= j);
      if (1.75 * b <= vol / h.v3) CHECK(f == j);
    }
  CHECK_THROWS_AS(jungreis_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(thm_f_bound(-1, 2), std::invalid_argument);

  const ObtuseVolumeCaps caps = obtuse_volume_caps();
  CHECK(caps.two_obtuse_cap == doctest::Approx(0.507471).epsilon(2e-6));
  CHECK(caps.one_obtuse_cap == doctest::Approx(0.915965).epsilon(1e-6));
  CHECK(caps.one_obtuse_cap > caps.two_obtuse_cap);
}

TEST_CASE("small manifold table") {
  const auto rows = small_manifold_table(100);
  REQUIRE(rows.size() == 99);
  CHECK(rows[0].genus == 2);
  CHECK(rows[0].boundary_norm == 4);
  CHECK(rows[0].min_volume == doctest::Approx(6.452).epsilon(1e-3 / 6.452));
  CHECK(rows[0].best_source == "hyperbolic");
  CHECK(rows[2].thm_f == doctest::Approx(15.165).epsilon(2e-3 / 15.165));
  CHECK(rows[2].thm_c == 15);
  CHECK(rows[2].best_source == "hyperbolic");
  for (const auto& r : rows) {
    if (r.genus < 5) continue;
    CAPTURE(r.genus);
    CHECK(r.best_source == "aspherical");
    CHECK(r.best == 5.0 * (r.genus - 1));
    CHECK(r.cmp1);
    CHECK(r.cmp2);
  }
  CHECK_THROWS_AS(small_manifold_table(1), std::invalid_argument);
}
