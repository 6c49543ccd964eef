#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "simpvol/pseudomanifold.hpp"

namespace simpvol {

using Json = nlohmann::ordered_json;

/// Thrown when a document is not shaped like a triangulation at all (missing
/// keys, wrong JSON types). Structural violations of well-shaped input are
/// reported through InvalidPseudomanifold instead.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"dimension": n, "simplices": k, "gluings": [{"a": [i, j], "b": [i2, j2], "map": [...]}, ...]}
Json to_json(const Pseudomanifold& p);

/// Rejects gluings that are not stored with a < b in sorted order, plus every
/// validate() diagnostic.
Pseudomanifold from_json(const Json& doc);

std::string dump_triangulation(const Pseudomanifold& p);
Pseudomanifold parse_triangulation(const std::string& text);

void write_triangulation(const Pseudomanifold& p, const std::filesystem::path& path);
Pseudomanifold read_triangulation(const std::filesystem::path& path);

}  // namespace simpvol
