#include "simpvol/json_io.hpp"

#include <fstream>
#include <sstream>

namespace simpvol {

namespace {

FaceRef parse_face(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 || !j[key][0].is_number_integer() ||
      !j[key][1].is_number_integer())
    throw FormatError(std::string("gluing field '") + key + "' must be a pair of integers");
  return {j[key][0].get<int>(), j[key][1].get<int>()};
}

}  // namespace

Json to_json(const Pseudomanifold& p) {
  Json gluings = Json::array();
  for (const auto& g : p.gluings()) {
    Json entry;
    entry["a"] = {g.a.simplex, g.a.face};
    entry["b"] = {g.b.simplex, g.b.face};
    entry["map"] = g.map;
    gluings.push_back(std::move(entry));
  }
  Json doc;
  doc["dimension"] = p.dimension();
  doc["simplices"] = p.simplex_count();
  doc["gluings"] = std::move(gluings);
  return doc;
}

Pseudomanifold from_json(const Json& doc) {
  if (!doc.is_object()) throw FormatError("triangulation must be a JSON object");
  for (const char* key : {"dimension", "simplices"})
    if (!doc.contains(key) || !doc[key].is_number_integer())
      throw FormatError(std::string("missing integer field '") + key + "'");
  if (!doc.contains("gluings") || !doc["gluings"].is_array())
    throw FormatError("missing array field 'gluings'");

  std::vector<Gluing> gluings;
  std::vector<Diagnostic> diagnostics;
  for (std::size_t k = 0; k < doc["gluings"].size(); ++k) {
    const Json& entry = doc["gluings"][k];
    if (!entry.is_object()) throw FormatError("gluing entries must be objects");
    Gluing g{parse_face(entry, "a"), parse_face(entry, "b"), {}};
    if (!entry.contains("map") || !entry["map"].is_array())
      throw FormatError("gluing field 'map' must be an array of integers");
    for (const auto& v : entry["map"]) {
      if (!v.is_number_integer()) throw FormatError("gluing field 'map' must be an array of integers");
      g.map.push_back(v.get<int>());
    }
    if (!(g.a < g.b))
      diagnostics.push_back({DiagnosticCode::non_canonical_order,
                             "gluing " + std::to_string(k) + ": expected a < b lexicographically"});
    if (!gluings.empty() && !(std::tie(gluings.back().a, gluings.back().b) < std::tie(g.a, g.b)))
      diagnostics.push_back({DiagnosticCode::non_canonical_order,
                             "gluing " + std::to_string(k) + ": gluings not sorted"});
    gluings.push_back(std::move(g));
  }

  Pseudomanifold p(doc["dimension"].get<int>(), doc["simplices"].get<int>(), std::move(gluings));
  auto structural = validate(p);
  diagnostics.insert(diagnostics.end(), structural.begin(), structural.end());
  if (!diagnostics.empty()) throw InvalidPseudomanifold(std::move(diagnostics));
  return p;
}

std::string dump_triangulation(const Pseudomanifold& p) { return to_json(p).dump() + "\n"; }

Pseudomanifold parse_triangulation(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(doc);
}

void write_triangulation(const Pseudomanifold& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << dump_triangulation(p);
}

Pseudomanifold read_triangulation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_triangulation(buffer.str());
}

}  // namespace simpvol
