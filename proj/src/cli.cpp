#include "simpvol/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "simpvol/boundary.hpp"
#include "simpvol/bounds.hpp"
#include "simpvol/face_classes.hpp"
#include "simpvol/generators.hpp"
#include "simpvol/homology.hpp"
#include "simpvol/hypervol.hpp"
#include "simpvol/json_io.hpp"
#include "simpvol/surfaces.hpp"
#include "simpvol/topology.hpp"

namespace simpvol::cli {

namespace {

// Problems with the contents of an input file, as opposed to the arguments.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(22) << key << value << '\n';
}

template <class T>
std::string joined(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? " " : "") << xs[k];
  return os.str();
}

Pseudomanifold load(const std::string& path) {
  try {
    return read_triangulation(path);
  } catch (const InvalidPseudomanifold& e) {
    std::string message = path + ": invalid triangulation";
    for (const auto& d : e.diagnostics()) message += "\n  " + d.message;
    throw InputError(message);
  } catch (const FormatError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json homology_json(const HomologyGroup& h) {
  Json j;
  j["betti"] = h.betti;
  Json torsion = Json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.str());
  j["torsion"] = torsion;
  return j;
}

std::string homology_text(const HomologyGroup& h) {
  std::string s;
  if (h.betti == 1) s = "Z";
  if (h.betti > 1) s = "Z^" + std::to_string(h.betti);
  for (const auto& t : h.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
  return s.empty() ? "0" : s;
}

// ---- gen -----------------------------------------------------------------

struct GenOptions {
  std::string kind;
  int dim = 3;
  int genus = 2;
  std::string output;
};

int run_gen(const GenOptions& o, std::ostream& out) {
  Pseudomanifold p(3, 0);
  if (o.kind == "cone") {
    if (o.dim < 1) throw std::invalid_argument("--dim must be at least 1");
    p = cone_over_simplex_boundary(o.dim);
  } else if (o.kind == "solid-torus") {
    p = solid_torus();
  } else if (o.kind == "handlebody") {
    if (o.genus < 1) throw std::invalid_argument("--genus must be at least 1");
    p = handlebody(o.genus);
  } else {
    if (o.genus < 1) throw std::invalid_argument("--genus must be at least 1");
    p = product_surface_interval(o.genus);
  }
  if (o.output.empty() || o.output == "-")
    out << dump_triangulation(p) << '\n';
  else
    write_triangulation(p, o.output);
  return ok;
}

// ---- check ---------------------------------------------------------------

Json check_report(const Pseudomanifold& p) {
  Json j;
  j["dimension"] = p.dimension();
  j["simplices"] = p.simplex_count();
  j["gluings"] = p.gluing_count();
  j["orientable"] = orientability(p).orientable();
  j["euler_characteristic"] = euler_characteristic(p);
  j["components"] = connected_components(p).size();
  const DualGraphSummary dual = dual_graph(p);
  j["dual_graph"] = {{"vertices", dual.vertices}, {"edges", dual.edges},
                     {"euler_characteristic", dual.euler_characteristic}};
  j["boundary_profile"] = boundary_profile(p).t;

  const Pseudomanifold b = boundary(p);
  Json bj;
  bj["simplices"] = b.simplex_count();
  bj["components"] = connected_components(b).size();
  if (p.dimension() == 3) {
    Json surfaces = Json::array();
    for (const auto& c : analyze_surface(b).components)
      surfaces.push_back({{"genus", c.genus},
                          {"orientable", c.orientable},
                          {"euler_characteristic", c.euler_characteristic},
                          {"triangles", c.triangles}});
    bj["surfaces"] = surfaces;
  }
  j["boundary"] = bj;

  if (p.dimension() == 3) {
    const ManifoldCheck m = manifold_check(p);
    j["manifold"] = m.manifold;
    j["folded_edges"] = m.folded_edges;
  }
  if (p.dimension() >= 2) j["h1"] = homology_json(homology(p, 1));
  return j;
}

void print_check(const Json& j, std::ostream& out) {
  row(out, "dimension", std::to_string(j["dimension"].get<int>()));
  row(out, "simplices", std::to_string(j["simplices"].get<int>()));
  row(out, "gluings", std::to_string(j["gluings"].get<int>()));
  row(out, "orientable", yes_no(j["orientable"].get<bool>()));
  row(out, "euler characteristic", std::to_string(j["euler_characteristic"].get<int>()));
  row(out, "components", std::to_string(j["components"].get<int>()));
  row(out, "dual graph chi", std::to_string(j["dual_graph"]["euler_characteristic"].get<int>()));
  row(out, "boundary profile", joined(j["boundary_profile"].get<std::vector<int>>()));
  const Json& b = j["boundary"];
  row(out, "boundary", std::to_string(b["simplices"].get<int>()) + " faces, " +
                           std::to_string(b["components"].get<int>()) + " components");
  if (b.contains("surfaces"))
    for (const auto& s : b["surfaces"])
      out << "  genus " << s["genus"].get<int>() << (s["orientable"].get<bool>() ? " orientable" : " nonorientable")
          << ", " << s["triangles"].get<int>() << " triangles\n";
  if (j.contains("manifold")) row(out, "manifold", yes_no(j["manifold"].get<bool>()));
  if (j.contains("h1")) {
    HomologyGroup h;
    h.betti = j["h1"]["betti"].get<int>();
    for (const auto& t : j["h1"]["torsion"]) h.torsion.emplace_back(t.get<std::string>());
    row(out, "H1", homology_text(h));
  }
}

// ---- bounds --------------------------------------------------------------

struct BoundsOptions {
  std::string file;
  std::optional<int> dim;
  std::optional<std::string> boundary_norm;
  bool aspherical = false;
  bool boundary_irreducible = false;
  bool hyperbolic = false;
  std::optional<double> vol;
  std::optional<double> boundary_vol;
};

int run_bounds(const BoundsOptions& o, bool json, std::ostream& out) {
  ManifoldDescriptor m;
  if (!o.file.empty()) {
    if (o.dim || o.boundary_norm) throw std::invalid_argument("give either FILE or --dim/--boundary-norm");
    const Pseudomanifold p = load(o.file);
    if (p.dimension() != 3)
      throw InputError(o.file + ": boundary norm is only computed for 3-dimensional triangulations");
    m.dimension = 3;
    m.boundary_norm = surface_simplicial_volume(analyze_surface(boundary(p)));
  } else {
    if (!o.dim || !o.boundary_norm) throw std::invalid_argument("--dim and --boundary-norm are required without FILE");
    m.dimension = *o.dim;
    m.boundary_norm = parse_rational(*o.boundary_norm);
  }
  m.aspherical = o.aspherical;
  m.boundary_irreducible = o.boundary_irreducible;
  m.hyperbolic_geodesic_boundary = o.hyperbolic;
  m.volume = o.vol;
  m.boundary_volume = o.boundary_vol;

  const std::vector<BoundReport> all = applicable_bounds(m);
  const BoundReport best = best_lower_bound(m);
  if (json) {
    Json j;
    j["dimension"] = m.dimension;
    j["boundary_norm"] = to_string(m.boundary_norm);
    Json list = Json::array();
    for (const auto& r : all) list.push_back(to_json(r));
    j["bounds"] = list;
    j["best"] = to_json(best);
    out << j.dump(2) << '\n';
    return ok;
  }
  row(out, "dimension", std::to_string(m.dimension));
  row(out, "boundary norm", to_string(m.boundary_norm));
  for (const auto& r : all) {
    std::string value = num(r.value);
    if (r.exact && boost::multiprecision::denominator(*r.exact) != 1) value += " (" + to_string(*r.exact) + ")";
    row(out, r.source, value);
  }
  row(out, "best", num(best.value) + " via " + best.source);
  return ok;
}

// ---- certify -------------------------------------------------------------

struct CertifyOptions {
  std::string file;
  int degree = 1;
  std::string boundary_norm;
  int components = 0;
};

int run_certify(const CertifyOptions& o, bool json, std::ostream& out) {
  const Rational b = parse_rational(o.boundary_norm);
  const Pseudomanifold p = load(o.file);
  if (p.dimension() != 3) throw InputError(o.file + ": certify needs a 3-dimensional triangulation");
  if (connected_components(p).size() != 1) throw InputError(o.file + ": certify needs a connected triangulation");

  const CountingCertificate c = counting_certificate(p, o.degree, b, o.components);
  const AdmissibilityReport adm = admissibility_check(p);
  const std::vector<BadEdgeCheck> bad = check_bad_edge_lemma(p);
  if (json) {
    Json j;
    j["certificate"] = to_json(c);
    j["admissibility"] = to_json(adm);
    j["bad_edges"] = to_json(bad);
    out << j.dump(2) << '\n';
    return ok;
  }
  row(out, "t profile", joined(c.t));
  row(out, "nice edges", std::to_string(c.nice_edges));
  row(out, "bad edges", std::to_string(c.bad_edges));
  row(out, "boundary triangles", std::to_string(c.boundary_triangles));
  row(out, "dual graph chi", std::to_string(c.dual_graph_euler_characteristic));
  row(out, "handlebody genus", std::to_string(c.handlebody_genus));
  for (const auto& q : c.inequalities)
    out << "  " << (q.pass ? "pass " : "FAIL ") << std::left << std::setw(28) << q.statement << to_string(q.lhs)
        << " vs " << to_string(q.rhs) << '\n';
  row(out, "admissible", yes_no(adm.pass));
  for (const auto& w : adm.witnesses) out << "  " << w << '\n';
  int glued = 0;
  for (const auto& e : bad) glued += e.pass ? 1 : 0;
  row(out, "bad edges glued", std::to_string(glued) + " of " + std::to_string(bad.size()));
  return ok;
}

// ---- hyp -----------------------------------------------------------------

Json row_json(const SmallManifoldRow& r) {
  return {{"g", r.genus},       {"boundary_norm", r.boundary_norm}, {"min_vol", r.min_volume},
          {"jungreis", r.jungreis}, {"thm_c", r.thm_c},            {"thm_f", r.thm_f},
          {"best", r.best},     {"best_source", r.best_source},    {"cmp1", r.cmp1},
          {"cmp2", r.cmp2}};
}

void print_table(const std::vector<SmallManifoldRow>& rows, std::ostream& out) {
  const char* headers[] = {"g", "bnorm", "min_vol", "jungreis", "thm_c", "thm_f", "best", "source", "cmp1", "cmp2"};
  auto line = [&out](const auto& cells) {
    std::string text;
    for (const auto& c : cells) {
      std::string cell = c;
      text += cell + std::string(cell.size() < 12 ? 12 - cell.size() : 1, ' ');
    }
    out << text.substr(0, text.find_last_not_of(' ') + 1) << '\n';
  };
  line(headers);
  for (const auto& r : rows) {
    const std::string cells[] = {std::to_string(r.genus), num(r.boundary_norm), num(r.min_volume), num(r.jungreis),
                                 num(r.thm_c),            num(r.thm_f),         num(r.best),       r.best_source,
                                 yes_no(r.cmp1),          yes_no(r.cmp2)};
    line(cells);
  }
}

void emit(std::ostream& out, bool json, const Json& j, const std::string& label, double value) {
  if (json)
    out << j.dump(2) << '\n';
  else
    row(out, label, num(value));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial volume and complexity toolkit", "simpvol"};
  app.require_subcommand(1);
  bool json = false;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a triangulation");
  gen_cmd->add_option("kind", gen.kind, "cone | solid-torus | handlebody | product")
      ->required()
      ->check(CLI::IsMember({"cone", "solid-torus", "handlebody", "product"}));
  gen_cmd->add_option("--dim", gen.dim, "Dimension of the cone");
  gen_cmd->add_option("--genus", gen.genus, "Genus for handlebody and product");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (stdout when omitted)");

  std::string check_file;
  auto* check_cmd = app.add_subcommand("check", "Validate and analyse a triangulation");
  check_cmd->add_option("file", check_file)->required();
  check_cmd->add_flag("--json", json);

  BoundsOptions bo;
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds on the simplicial volume");
  bounds_cmd->add_option("file", bo.file, "Triangulation whose boundary norm is used");
  bounds_cmd->add_option("--dim", bo.dim);
  bounds_cmd->add_option("--boundary-norm", bo.boundary_norm, "Rational, e.g. 4 or 8/3");
  bounds_cmd->add_flag("--aspherical", bo.aspherical);
  bounds_cmd->add_flag("--boundary-irreducible", bo.boundary_irreducible);
  bounds_cmd->add_flag("--hyperbolic", bo.hyperbolic, "Hyperbolic with geodesic boundary (needs --vol)");
  bounds_cmd->add_option("--vol", bo.vol);
  bounds_cmd->add_option("--boundary-vol", bo.boundary_vol);
  bounds_cmd->add_flag("--json", json);

  CertifyOptions co;
  auto* certify_cmd = app.add_subcommand("certify", "Check the counting inequalities on a triangulation");
  certify_cmd->add_option("file", co.file)->required();
  certify_cmd->add_option("--degree", co.degree)->check(CLI::PositiveNumber);
  certify_cmd->add_option("--boundary-norm", co.boundary_norm)->required();
  certify_cmd->add_option("--components", co.components)->required()->check(CLI::NonNegativeNumber);
  certify_cmd->add_flag("--json", json);

  auto* hyp_cmd = app.add_subcommand("hyp", "Hyperbolic volumes and bounds");
  hyp_cmd->require_subcommand(1);
  int max_genus = 0, truncated_genus = 0;
  double theta = 0, vol = 0;
  std::string bnorm_text;
  std::vector<double> angles;
  auto* table_cmd = hyp_cmd->add_subcommand("table", "Bounds for the smallest manifolds with geodesic boundary");
  table_cmd->add_option("--max-genus", max_genus)->required();
  auto* lob_cmd = hyp_cmd->add_subcommand("lob", "Lobachevsky function");
  lob_cmd->add_option("--theta", theta)->required();
  auto* tet_cmd = hyp_cmd->add_subcommand("tet", "Ideal tetrahedron volume from dihedral angles");
  tet_cmd->add_option("--angles", angles)->required()->delimiter(',')->expected(3);
  auto* trunc_cmd = hyp_cmd->add_subcommand("truncated", "Regular truncated tetrahedron volume");
  trunc_cmd->add_option("--genus", truncated_genus)->required();
  auto* hbound_cmd = hyp_cmd->add_subcommand("bound", "Volume-based lower bounds");
  hbound_cmd->add_option("--vol", vol)->required();
  hbound_cmd->add_option("--boundary-norm", bnorm_text)->required();
  auto* const_cmd = hyp_cmd->add_subcommand("constants", "Catalan's constant, v3 and the bound coefficient");
  for (auto* c : {table_cmd, lob_cmd, tet_cmd, trunc_cmd, hbound_cmd, const_cmd}) c->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "simpvol: " << e.what() << '\n';
    return bad_arguments;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (check_cmd->parsed()) {
      const Json report = check_report(load(check_file));
      if (json)
        out << report.dump(2) << '\n';
      else
        print_check(report, out);
      return ok;
    }
    if (bounds_cmd->parsed()) return run_bounds(bo, json, out);
    if (certify_cmd->parsed()) return run_certify(co, json, out);

    if (table_cmd->parsed()) {
      const auto rows = small_manifold_table(max_genus);
      if (json) {
        Json list = Json::array();
        for (const auto& r : rows) list.push_back(row_json(r));
        out << list.dump(2) << '\n';
      } else {
        print_table(rows, out);
      }
    } else if (lob_cmd->parsed()) {
      const double v = lobachevsky(theta);
      emit(out, json, {{"theta", theta}, {"value", v}}, "L(theta)", v);
    } else if (tet_cmd->parsed()) {
      const double v = ideal_tetrahedron_volume(angles[0], angles[1], angles[2]);
      emit(out, json, {{"angles", angles}, {"volume", v}}, "volume", v);
    } else if (trunc_cmd->parsed()) {
      const double v = regular_truncated_volume(truncated_genus);
      emit(out, json, {{"genus", truncated_genus}, {"volume", v}}, "volume", v);
    } else if (hbound_cmd->parsed()) {
      const double b = parse_rational(bnorm_text).convert_to<double>();
      const double j = jungreis_bound(vol), f = thm_f_bound(vol, b);
      if (json) {
        out << Json{{"vol", vol}, {"boundary_norm", b}, {"jungreis", j}, {"thm_f", f}}.dump(2) << '\n';
      } else {
        row(out, "jungreis", num(j));
        row(out, "hyperbolic", num(f));
      }
    } else if (const_cmd->parsed()) {
      const auto& h = hyp_constants();
      const ObtuseVolumeCaps caps = obtuse_volume_caps();
      if (json) {
        out << Json{{"catalan", h.catalan},
                    {"v3", h.v3},
                    {"v2", h.v2},
                    {"thm_f_coefficient", h.thm_f_coefficient},
                    {"two_obtuse_cap", caps.two_obtuse_cap},
                    {"one_obtuse_cap", caps.one_obtuse_cap}}
                   .dump(2)
            << '\n';
      } else {
        row(out, "catalan", num(h.catalan));
        row(out, "v3", num(h.v3));
        row(out, "v2", num(h.v2));
        row(out, "coefficient", num(h.thm_f_coefficient));
        row(out, "two obtuse cap", num(caps.two_obtuse_cap));
        row(out, "one obtuse cap", num(caps.one_obtuse_cap));
      }
    }
    return ok;
  } catch (const InputError& e) {
    err << "simpvol: " << e.what() << '\n';
    return invalid_input;
  } catch (const std::invalid_argument& e) {
    err << "simpvol: " << e.what() << '\n';
    return bad_arguments;
  } catch (const std::exception& e) {
    err << "simpvol: " << e.what() << '\n';
    return invalid_input;
  }
}

}  // namespace simpvol::cli
