#include "simpvol/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "simpvol/boundary.hpp"
#include "simpvol/face_classes.hpp"
#include "simpvol/homology.hpp"
#include "simpvol/hypervol.hpp"
#include "simpvol/topology.hpp"

namespace simpvol {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

BoundReport rational_report(const Rational& value, BoundKind kind, std::string source,
                            std::vector<std::string> hypotheses) {
  BoundReport r;
  r.value = to_double(value);
  r.exact = value;
  r.kind = kind;
  r.source = std::move(source);
  r.hypotheses = std::move(hypotheses);
  return r;
}

void require_nonnegative(const Rational& b, const char* what) {
  if (b < 0) throw std::invalid_argument(std::string(what) + ": boundary norm must be nonnegative");
}

void require_three_dimensional(const Pseudomanifold& p, const char* what) {
  require_valid(p);
  if (p.dimension() != 3) throw std::invalid_argument(std::string(what) + ": dimension must be 3");
}

// P-edge classes that contain an edge of some unglued face.
std::vector<bool> boundary_edge_classes(const Pseudomanifold& p, const FaceClassTable& classes) {
  std::vector<bool> on_boundary(static_cast<std::size_t>(classes.count(1)), false);
  const GluingTable table(p);
  for (int s = 0; s < p.simplex_count(); ++s)
    for (int f = 0; f <= 3; ++f) {
      if (!table.is_boundary({s, f})) continue;
      for (VertexSet e : subsets_of_size(3, 2)) {
        if (e & bit(f)) continue;
        on_boundary[classes.class_of({s, e})] = true;
      }
    }
  return on_boundary;
}

}  // namespace

void require_valid(const ManifoldDescriptor& m) {
  if (m.dimension < 2) throw std::invalid_argument("manifold descriptor: dimension must be at least 2");
  require_nonnegative(m.boundary_norm, "manifold descriptor");
  if (m.volume && !(*m.volume > 0)) throw std::invalid_argument("manifold descriptor: volume must be positive");
  if (m.boundary_volume && !(*m.boundary_volume > 0))
    throw std::invalid_argument("manifold descriptor: boundary volume must be positive");
  if (m.hyperbolic_geodesic_boundary && !m.volume)
    throw std::invalid_argument("manifold descriptor: hyperbolic flag requires a volume");
}

BoundReport boundary_bound_generic(int n, const Rational& boundary_norm) {
  if (n < 1) throw std::invalid_argument("boundary_bound_generic: dimension must be at least 1");
  require_nonnegative(boundary_norm, "boundary_bound_generic");
  return rational_report(boundary_norm / (n + 1), BoundKind::lower_bound, "generic", {});
}

BoundReport boundary_bound_improved(int n, const Rational& boundary_norm) {
  if (n < 2) throw std::invalid_argument("boundary_bound_improved: dimension must be at least 2");
  require_nonnegative(boundary_norm, "boundary_bound_improved");
  return rational_report(boundary_norm / (n - 1), BoundKind::lower_bound, "improved", {});
}

BoundReport bound_3manifold(const Rational& boundary_norm) {
  require_nonnegative(boundary_norm, "bound_3manifold");
  return rational_report(boundary_norm * 3 / 4, BoundKind::lower_bound, "three-manifold", {"dimension 3"});
}

BoundReport bound_aspherical(const Rational& boundary_norm, int dimension) {
  if (dimension < 2) throw std::invalid_argument("bound_aspherical: dimension must be at least 2");
  require_nonnegative(boundary_norm, "bound_aspherical");
  const Rational factor = dimension == 3 ? Rational(5, 4) : Rational(1);
  return rational_report(boundary_norm * factor, BoundKind::lower_bound, "aspherical",
                         {"aspherical", "boundary irreducible"});
}

BoundReport value_handlebody(int genus) {
  if (genus < 0) throw std::invalid_argument("value_handlebody: genus must be nonnegative");
  return rational_report(Rational(genus <= 1 ? 0 : 3 * (genus - 1)), BoundKind::exact, "handlebody",
                         {"handlebody"});
}

BoundReport value_seifert_plus_handles(int handles) {
  if (handles < 0) throw std::invalid_argument("value_seifert_plus_handles: handle count must be nonnegative");
  return rational_report(Rational(3 * handles), BoundKind::exact, "seifert-plus-handles",
                         {"Seifert manifold with one-handles attached"});
}

ProductSurfaceValues value_product_surface(int genus) {
  if (genus < 1) throw std::invalid_argument("value_product_surface: genus must be at least 1");
  ProductSurfaceValues v;
  v.simplicial_volume = 10 * (genus - 1);
  v.delta_complexity = 10 * (genus - 1) + 6;
  v.stable_delta_complexity = 10 * (genus - 1);
  return v;
}

EdgeCensus nice_bad_edges(const Pseudomanifold& p) {
  require_three_dimensional(p, "nice_bad_edges");
  const FaceClassTable classes(p);
  const BoundaryComplex bc = boundary_with_origin(p);
  const FaceClassTable boundary_classes(bc.complex);
  // P-edge classes touched by simplices without boundary faces.
  const GluingTable table(p);
  std::vector<bool> touched(static_cast<std::size_t>(classes.count(1)), false);
  for (int s = 0; s < p.simplex_count(); ++s) {
    bool interior = true;
    for (int f = 0; f <= 3; ++f) interior = interior && !table.is_boundary({s, f});
    if (!interior) continue;
    for (VertexSet e : subsets_of_size(3, 2)) touched[classes.class_of({s, e})] = true;
  }

  EdgeCensus census;
  for (int c = 0; c < boundary_classes.count(1); ++c) {
    const Face lifted = lift_to_interior(bc, boundary_classes.representative(1, c));
    const bool nice = touched[classes.class_of(lifted)];
    census.is_nice.push_back(nice);
    (nice ? census.nice : census.bad) += 1;
  }
  return census;
}

std::vector<BadEdgeCheck> check_bad_edge_lemma(const Pseudomanifold& p) {
  require_three_dimensional(p, "check_bad_edge_lemma");
  const BoundaryComplex bc = boundary_with_origin(p);
  const FaceClassTable boundary_classes(bc.complex);
  const EdgeCensus census = nice_bad_edges(p);

  std::vector<BadEdgeCheck> checks;
  const auto& gluings = bc.complex.gluings();
  for (std::size_t k = 0; k < gluings.size(); ++k) {
    const FaceRef side = gluings[k].a;
    const int cls = boundary_classes.class_of({side.simplex, full_set(2) & ~bit(side.face)});
    if (census.is_nice[cls]) continue;
    const RidgeWalk& walk = bc.walks[k];
    checks.push_back({cls, walk.first_exit, walk.last_entry, walk.steps, walk.steps == 1});
  }
  std::sort(checks.begin(), checks.end(),
            [](const BadEdgeCheck& x, const BadEdgeCheck& y) { return x.boundary_edge_class < y.boundary_edge_class; });
  return checks;
}

AdmissibilityReport admissibility_check(const Pseudomanifold& p) {
  require_three_dimensional(p, "admissibility_check");
  const FaceClassTable classes(p);
  const std::vector<bool> on_boundary = boundary_edge_classes(p, classes);
  const GluingTable table(p);

  AdmissibilityReport report;
  for (int s = 0; s < p.simplex_count(); ++s) {
    int free_faces = 0;
    for (int f = 0; f <= 3; ++f) free_faces += table.is_boundary({s, f}) ? 1 : 0;
    int boundary_edges = 0;
    for (VertexSet e : subsets_of_size(3, 2)) boundary_edges += on_boundary[classes.class_of({s, e})] ? 1 : 0;

    std::ostringstream why;
    if (free_faces >= 2)
      why << "simplex " << s << " has " << free_faces << " boundary faces";
    else if (free_faces == 0 && boundary_edges > 2)
      why << "interior simplex " << s << " has " << boundary_edges << " boundary edges";
    else if (boundary_edges > 3)
      why << "simplex " << s << " has " << boundary_edges << " boundary edges";
    if (!why.str().empty()) report.witnesses.push_back(why.str());
  }
  report.pass = report.witnesses.empty();
  return report;
}

bool CountingCertificate::all_pass() const {
  return std::all_of(inequalities.begin(), inequalities.end(), [](const InequalityCheck& c) { return c.pass; });
}

CountingCertificate counting_certificate(const Pseudomanifold& p, int degree, const Rational& boundary_norm,
                                         int components) {
  require_three_dimensional(p, "counting_certificate");
  if (connected_components(p).size() != 1) throw std::invalid_argument("counting_certificate: input must be connected");
  if (degree < 1) throw std::invalid_argument("counting_certificate: degree must be positive");
  if (components < 0) throw std::invalid_argument("counting_certificate: component count must be nonnegative");
  require_nonnegative(boundary_norm, "counting_certificate");

  CountingCertificate c;
  const BoundaryProfile profile = boundary_profile(p);
  const EdgeCensus census = nice_bad_edges(p);
  c.t = profile.t;
  c.nice_edges = census.nice;
  c.bad_edges = census.bad;
  c.boundary_triangles = profile.boundary_face_count();
  c.dual_graph_euler_characteristic = dual_graph(p).euler_characteristic;
  c.handlebody_genus = handlebody_genus(p);
  c.degree = degree;
  c.boundary_norm = boundary_norm;
  c.components = components;

  const Rational db = boundary_norm * degree;
  const Rational t0 = c.t[0], t1 = c.t[1], t2 = c.t[2];
  const Rational nice = c.nice_edges;
  auto add = [&](std::string name, std::string statement, Rational lhs, Rational rhs) {
    const bool pass = lhs >= rhs;
    c.inequalities.push_back({std::move(name), std::move(statement), std::move(lhs), std::move(rhs), pass});
  };
  add("boundary_faces", "t1 + 2 t2 >= d b", t1 + 2 * t2, db);
  add("handlebody_genus", "4 g - 4 >= d b", Rational(4 * c.handlebody_genus - 4), db);
  add("profile_weight", "4 t0 + 2 t1 >= d b", 4 * t0 + 2 * t1, db);
  add("three_quarters", "4 (t0 + t1 + t2) >= 3 d b", 4 * (t0 + t1 + t2), 3 * db);
  add("nice_edges", "2 E_nice >= 4 c + d b", 2 * nice, 4 * components + db);
  add("interior_simplices", "t0 >= E_nice / 2", t0, nice / 2);
  return c;
}

std::vector<BoundReport> applicable_bounds(const ManifoldDescriptor& m) {
  require_valid(m);
  std::vector<BoundReport> bounds;
  bounds.push_back(boundary_bound_generic(m.dimension, m.boundary_norm));
  bounds.push_back(boundary_bound_improved(m.dimension, m.boundary_norm));
  if (m.dimension == 3) bounds.push_back(bound_3manifold(m.boundary_norm));
  if (m.aspherical && m.boundary_irreducible) bounds.push_back(bound_aspherical(m.boundary_norm, m.dimension));
  if (m.hyperbolic_geodesic_boundary && m.dimension == 3) {
    BoundReport j;
    j.value = jungreis_bound(*m.volume);
    j.source = "jungreis";
    j.hypotheses = {"hyperbolic with geodesic boundary"};
    bounds.push_back(j);
    if (m.boundary_norm > 0) {
      BoundReport f;
      f.value = thm_f_bound(*m.volume, to_double(m.boundary_norm));
      f.source = "hyperbolic";
      f.hypotheses = {"hyperbolic with nonempty geodesic boundary"};
      bounds.push_back(f);
    }
  }
  return bounds;
}

BoundReport best_lower_bound(const ManifoldDescriptor& m) {
  const std::vector<BoundReport> bounds = applicable_bounds(m);
  auto best = bounds.begin();
  for (auto it = bounds.begin(); it != bounds.end(); ++it) {
    const bool larger = (it->exact && best->exact) ? *it->exact > *best->exact : it->value > best->value;
    if (larger) best = it;
  }
  return *best;
}

std::string to_string(BoundKind kind) { return kind == BoundKind::exact ? "exact" : "lower-bound"; }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

Rational parse_rational(const std::string& text) {
  auto integer = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("not a rational number: '" + text + "'");
    return BigInt(s);
  };
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const BigInt den = integer(body.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    value = Rational(integer(body.substr(0, slash)), den);
  } else if (const auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("not a rational number: '" + text + "'");
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    value = Rational(whole.empty() ? BigInt(0) : integer(whole)) +
            Rational(frac.empty() ? BigInt(0) : integer(frac), scale);
  } else {
    value = Rational(integer(body));
  }
  return negative ? Rational(-value) : value;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["value"] = r.value;
  j["exact"] = r.exact ? Json(to_string(*r.exact)) : Json(nullptr);
  j["kind"] = to_string(r.kind);
  j["source"] = r.source;
  j["hypotheses"] = r.hypotheses;
  return j;
}

Json to_json(const CountingCertificate& c) {
  Json j;
  j["t"] = c.t;
  j["nice_edges"] = c.nice_edges;
  j["bad_edges"] = c.bad_edges;
  j["boundary_triangles"] = c.boundary_triangles;
  j["dual_graph_euler_characteristic"] = c.dual_graph_euler_characteristic;
  j["handlebody_genus"] = c.handlebody_genus;
  j["degree"] = c.degree;
  j["boundary_norm"] = to_string(c.boundary_norm);
  j["components"] = c.components;
  Json list = Json::array();
  for (const auto& q : c.inequalities) {
    Json e;
    e["name"] = q.name;
    e["statement"] = q.statement;
    e["lhs"] = to_string(q.lhs);
    e["rhs"] = to_string(q.rhs);
    e["pass"] = q.pass;
    list.push_back(e);
  }
  j["inequalities"] = list;
  j["all_pass"] = c.all_pass();
  return j;
}

Json to_json(const AdmissibilityReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["witnesses"] = r.witnesses;
  return j;
}

Json to_json(const std::vector<BadEdgeCheck>& checks) {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["boundary_edge_class"] = c.boundary_edge_class;
    e["first_exit"] = {c.first_exit.simplex, c.first_exit.face};
    e["last_entry"] = {c.last_entry.simplex, c.last_entry.face};
    e["steps"] = c.steps;
    e["pass"] = c.pass;
    list.push_back(e);
  }
  return list;
}

}  // namespace simpvol
