#pragma once

#include <complex>
#include <string>
#include <vector>

namespace simpvol {

/// Constants of hyperbolic 3-space used by the volume bounds.
struct HypConstants {
  double catalan;           ///< G = Σ (−1)^k / (2k+1)^2
  double v3;                ///< volume of the regular ideal tetrahedron, 3·L(π/3)
  double v2;                ///< area of the ideal triangle, π
  double thm_f_coefficient; ///< (v3 − G) / (2(3·v3 − 2G))
};

const HypConstants& hyp_constants();

/// L(θ) = −∫₀^θ log|2 sin u| du. Odd and π-periodic.
double lobachevsky(double theta);

/// Catalan's constant from the alternating series with Cohen–Rodriguez
/// Villegas–Zagier acceleration.
double catalan();

/// Volume L(α) + L(β) + L(γ) of the ideal tetrahedron with dihedral angles
/// α, β, γ > 0 summing to π. Throws std::invalid_argument otherwise.
double ideal_tetrahedron_volume(double alpha, double beta, double gamma);

/// A point of the Riemann sphere.
struct ExtendedComplex {
  std::complex<double> value;
  bool infinite = false;

  static ExtendedComplex infinity() { return {{}, true}; }
  ExtendedComplex() = default;
  ExtendedComplex(std::complex<double> z, bool inf = false) : value(z), infinite(inf) {}
  ExtendedComplex(double x) : value(x) {}
};

/// Cross-ratio sending z0, z1, z2 to 0, 1, ∞; its image of z3 is the shape.
std::complex<double> cross_ratio(ExtendedComplex z0, ExtendedComplex z1, ExtendedComplex z2,
                                 ExtendedComplex z3);

/// Volume of the ideal tetrahedron with the given vertices on ∂H³; zero for
/// flat (real cross-ratio) configurations. Throws on coincident vertices.
double ideal_volume_from_vertices(ExtendedComplex z0, ExtendedComplex z1, ExtendedComplex z2,
                                  ExtendedComplex z3);

/// Volume of the regular truncated tetrahedron with dihedral angle π/(3g):
/// 8·L(π/4) − 3·∫₀^{π/3g} arccosh(cos t / (2 cos t − 1)) dt. Requires g ≥ 2.
double regular_truncated_volume(int genus);

/// Gauss–Legendre nodes and weights on [−1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// vol / v3, a strict lower bound for hyperbolic 3-manifolds with geodesic boundary.
double jungreis_bound(double volume);

/// Lower bound from volume and boundary norm for hyperbolic 3-manifolds with
/// nonempty geodesic boundary: vol/v3 when (7/4)·‖∂M‖ ≤ vol/v3, otherwise
/// vol/v3 + C·(7‖∂M‖ − 4·vol/v3).
double thm_f_bound(double volume, double boundary_norm);

/// Volume caps: v3/2 for simplices with two obtuse edges at a vertex, G for
/// simplices with one nonacute dihedral angle.
struct ObtuseVolumeCaps {
  double two_obtuse_cap;
  double one_obtuse_cap;
};

ObtuseVolumeCaps obtuse_volume_caps();

/// One genus of the smallest hyperbolic manifolds with connected geodesic
/// boundary of genus g: ‖∂M‖ = 4(g − 1) and vol(M) ≥ g·vol(Δ_g).
struct SmallManifoldRow {
  int genus = 0;
  double boundary_norm = 0;
  double min_volume = 0;
  double jungreis = 0;
  double thm_c = 0;
  double thm_f = 0;
  double best = 0;
  std::string best_source;
  /// (1 − 1/g)(v3 + 4G) > vol(Δ_g)
  bool cmp1 = false;
  /// 7(1 − 1/g)·v3 > vol(Δ_g)
  bool cmp2 = false;
};

std::vector<SmallManifoldRow> small_manifold_table(int max_genus);

}  // namespace simpvol
