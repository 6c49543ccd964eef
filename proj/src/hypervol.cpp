#include "simpvol/hypervol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace simpvol {

namespace {

constexpr double pi = std::numbers::pi;

double integrate(double a, double b, const GaussLegendreRule& rule, auto f) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double sum = 0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return half * sum;
}

// ζ(2k) / (k(2k+1)) for the series below.
const std::vector<double>& series_coefficients() {
  static const std::vector<double> coefficients = [] {
    std::vector<double> c(81);
    for (int k = 1; k <= 80; ++k) c[k] = std::riemann_zeta(2.0 * k) / (k * (2.0 * k + 1));
    return c;
  }();
  return coefficients;
}

}  // namespace

double lobachevsky(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("lobachevsky: argument must be finite");
  double x = std::fmod(theta, pi);
  if (x > pi / 2) x -= pi;
  if (x < -pi / 2) x += pi;
  const double sgn = x < 0 ? -1.0 : 1.0;
  x = std::abs(x);
  if (x == 0) return 0;

  // log(2 sin u) = log(2u) − Σ ζ(2k) u^{2k} / (k π^{2k}), integrated termwise.
  double sum = x * (1 - std::log(2 * x));
  const double ratio = (x / pi) * (x / pi);
  const auto& c = series_coefficients();
  double power = x;
  for (int k = 1; k <= 80; ++k) {
    power *= ratio;
    const double term = c[k] * power;
    sum += term;
    if (term < 1e-18) break;
  }
  return sgn * sum;
}

double catalan() {
  // Σ (−1)^k a_k with a_k = 1/(2k+1)^2.
  constexpr int n = 30;
  double d = std::pow(3 + std::sqrt(8.0), n);
  d = (d + 1 / d) / 2;
  double b = -1, c = -d, s = 0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const double a = 1.0 / ((2.0 * k + 1) * (2.0 * k + 1));
    s += c * a;
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1));
  }
  return s / d;
}

const HypConstants& hyp_constants() {
  static const HypConstants constants = [] {
    HypConstants h{};
    h.catalan = catalan();
    h.v3 = 3 * lobachevsky(pi / 3);
    h.v2 = pi;
    h.thm_f_coefficient = (h.v3 - h.catalan) / (2 * (3 * h.v3 - 2 * h.catalan));
    return h;
  }();
  return constants;
}

double ideal_tetrahedron_volume(double alpha, double beta, double gamma) {
  if (!(alpha > 0 && beta > 0 && gamma > 0))
    throw std::invalid_argument("ideal_tetrahedron_volume: angles must be positive");
  if (std::abs(alpha + beta + gamma - pi) > 1e-9)
    throw std::invalid_argument("ideal_tetrahedron_volume: angles must sum to pi");
  return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

std::complex<double> cross_ratio(ExtendedComplex z0, ExtendedComplex z1, ExtendedComplex z2, ExtendedComplex z3) {
  // [(z3 − z0)(z1 − z2)] / [(z3 − z2)(z1 − z0)]; each point occurs once above and
  // once below, so factors containing ∞ cancel.
  auto factor = [](const ExtendedComplex& x, const ExtendedComplex& y) {
    return (x.infinite || y.infinite) ? std::complex<double>(1) : x.value - y.value;
  };
  return factor(z3, z0) * factor(z1, z2) / (factor(z3, z2) * factor(z1, z0));
}

double ideal_volume_from_vertices(ExtendedComplex z0, ExtendedComplex z1, ExtendedComplex z2, ExtendedComplex z3) {
  const ExtendedComplex pts[] = {z0, z1, z2, z3};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const bool same = pts[i].infinite == pts[j].infinite &&
                        (pts[i].infinite || std::abs(pts[i].value - pts[j].value) == 0);
      if (same) throw std::invalid_argument("ideal_volume_from_vertices: coincident vertices");
    }
  const std::complex<double> z = cross_ratio(z0, z1, z2, z3);
  if (std::abs(z.imag()) <= 1e-15 * std::max(1.0, std::abs(z))) return 0;
  const double alpha = std::arg(z);
  const double beta = std::arg(1.0 / (1.0 - z));
  const double gamma = std::arg((z - 1.0) / z);
  return std::abs(lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma));
}

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    double x = std::cos(pi * (i + 0.75) / (order + 0.5));
    double derivative = 1;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1;
      derivative = order * (x * p1 - p0) / (x * x - 1);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * derivative * derivative);
  }
  return rule;
}

double regular_truncated_volume(int genus) {
  if (genus < 2) throw std::invalid_argument("regular_truncated_volume: genus must be at least 2");
  const double upper = pi / (3.0 * genus);
  auto integrand = [](double t) {
    const double c = std::cos(t);
    return std::acosh(std::max(1.0, c / (2 * c - 1)));
  };
  double previous = integrate(0, upper, gauss_legendre(8), integrand);
  double current = previous;
  for (int order = 16; order <= 1024; order *= 2) {
    current = integrate(0, upper, gauss_legendre(order), integrand);
    if (std::abs(current - previous) < 1e-12) break;
    previous = current;
  }
  return 8 * lobachevsky(pi / 4) - 3 * current;
}

double jungreis_bound(double volume) {
  if (!(volume > 0)) throw std::invalid_argument("jungreis_bound: volume must be positive");
  return volume / hyp_constants().v3;
}

double thm_f_bound(double volume, double boundary_norm) {
  if (!(volume > 0)) throw std::invalid_argument("thm_f_bound: volume must be positive");
  if (boundary_norm < 0) throw std::invalid_argument("thm_f_bound: boundary norm must be nonnegative");
  const auto& h = hyp_constants();
  const double ratio = volume / h.v3;
  if (1.75 * boundary_norm <= ratio) return ratio;
  return ratio + h.thm_f_coefficient * (7 * boundary_norm - 4 * ratio);
}

ObtuseVolumeCaps obtuse_volume_caps() {
  const auto& h = hyp_constants();
  return {h.v3 / 2, h.catalan};
}

std::vector<SmallManifoldRow> small_manifold_table(int max_genus) {
  if (max_genus < 2) throw std::invalid_argument("small_manifold_table: max genus must be at least 2");
  const auto& h = hyp_constants();
  std::vector<SmallManifoldRow> rows;
  for (int g = 2; g <= max_genus; ++g) {
    SmallManifoldRow r;
    r.genus = g;
    r.boundary_norm = 4.0 * (g - 1);
    const double cell = regular_truncated_volume(g);
    r.min_volume = g * cell;
    r.jungreis = jungreis_bound(r.min_volume);
    r.thm_c = 5.0 * (g - 1);
    r.thm_f = thm_f_bound(r.min_volume, r.boundary_norm);
    r.best = r.jungreis;
    r.best_source = "jungreis";
    if (r.thm_c > r.best) r.best = r.thm_c, r.best_source = "aspherical";
    if (r.thm_f > r.best) r.best = r.thm_f, r.best_source = "hyperbolic";
    const double shrink = 1 - 1.0 / g;
    r.cmp1 = shrink * (h.v3 + 4 * h.catalan) > cell;
    r.cmp2 = 7 * shrink * h.v3 > cell;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace simpvol
