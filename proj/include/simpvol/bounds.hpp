#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simpvol/json_io.hpp"
#include "simpvol/pseudomanifold.hpp"
#include "simpvol/surfaces.hpp"

namespace simpvol {

struct ManifoldDescriptor {
  int dimension = 3;
  Rational boundary_norm = 0;
  bool aspherical = false;
  bool boundary_irreducible = false;
  bool hyperbolic_geodesic_boundary = false;
  std::optional<double> volume;
  std::optional<double> boundary_volume;
};

/// Throws std::invalid_argument unless n ≥ 2, ‖∂M‖ ≥ 0, and any volume given is positive
/// (the hyperbolic flag requires one).
void require_valid(const ManifoldDescriptor& m);

enum class BoundKind { lower_bound, exact };

struct BoundReport {
  double value = 0;
  /// Set for the rational formula bounds.
  std::optional<Rational> exact;
  BoundKind kind = BoundKind::lower_bound;
  std::string source;
  std::vector<std::string> hypotheses;
};

/// ‖∂M‖/(n+1).
BoundReport boundary_bound_generic(int n, const Rational& boundary_norm);
/// ‖∂M‖/(n−1), n ≥ 2.
BoundReport boundary_bound_improved(int n, const Rational& boundary_norm);
/// (3/4)·‖∂M‖ for compact 3-manifolds.
BoundReport bound_3manifold(const Rational& boundary_norm);
/// (5/4)·‖∂M‖ in dimension 3 and ‖∂M‖ otherwise, for aspherical manifolds
/// with π₁-injective boundary.
BoundReport bound_aspherical(const Rational& boundary_norm, int dimension);

/// Simplicial volume of the genus-g handlebody: 0 for g ≤ 1, 3(g − 1) otherwise.
BoundReport value_handlebody(int genus);
/// 3h for a Seifert manifold with h one-handles attached (‖∂N‖ = 4h).
BoundReport value_seifert_plus_handles(int handles);

struct ProductSurfaceValues {
  Rational simplicial_volume;
  int delta_complexity = 0;
  Rational stable_delta_complexity;
};

/// S_g × [0,1]: volume 10(g − 1), Δ-complexity 10(g − 1) + 6, stable
/// Δ-complexity 10(g − 1). Requires g ≥ 1.
ProductSurfaceValues value_product_surface(int genus);

struct EdgeCensus {
  int nice = 0;
  int bad = 0;
  /// Per edge class of the boundary complex.
  std::vector<bool> is_nice;
};

/// Splits the edge classes of ∂P by whether some simplex of P without
/// boundary faces has an edge in the same class of P.
EdgeCensus nice_bad_edges(const Pseudomanifold& p);

struct BadEdgeCheck {
  /// Edge class in the boundary complex.
  int boundary_edge_class = 0;
  /// The faces of P through which the walk around the edge leaves the first
  /// boundary face's simplex and enters the second's.
  FaceRef first_exit;
  FaceRef last_entry;
  int steps = 0;
  /// first_exit and last_entry are glued to each other.
  bool pass = false;
};

/// For each bad boundary edge, whether the two faces of P adjacent to it
/// across the neighbouring boundary triangles are glued directly.
std::vector<BadEdgeCheck> check_bad_edge_lemma(const Pseudomanifold& p);

struct AdmissibilityReport {
  bool pass = false;
  std::vector<std::string> witnesses;
};

/// Passes iff no simplex has two or more boundary faces, every simplex without
/// boundary faces has at most two edges on the boundary, and every simplex at
/// most three.
AdmissibilityReport admissibility_check(const Pseudomanifold& p);

struct InequalityCheck {
  std::string name;
  std::string statement;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

struct CountingCertificate {
  std::vector<int> t;
  int nice_edges = 0;
  int bad_edges = 0;
  int boundary_triangles = 0;
  int dual_graph_euler_characteristic = 0;
  int handlebody_genus = 0;
  int degree = 1;
  Rational boundary_norm;
  int components = 0;
  std::vector<InequalityCheck> inequalities;

  bool all_pass() const;
};

/// Evaluates the counting inequalities relating the boundary profile, the dual
/// graph and the nice edges to d·‖∂M‖. Requires a connected 3-dimensional P.
CountingCertificate counting_certificate(const Pseudomanifold& p, int degree, const Rational& boundary_norm,
                                         int components);

/// The largest bound applicable to m.
BoundReport best_lower_bound(const ManifoldDescriptor& m);

/// Every bound applicable to m, in evaluation order.
std::vector<BoundReport> applicable_bounds(const ManifoldDescriptor& m);

std::string to_string(BoundKind kind);
/// "p/q" or "p".
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

Json to_json(const BoundReport& r);
Json to_json(const CountingCertificate& c);
Json to_json(const AdmissibilityReport& r);
Json to_json(const std::vector<BadEdgeCheck>& checks);

}  // namespace simpvol
