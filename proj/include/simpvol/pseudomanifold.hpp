#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "simpvol/permutation.hpp"

namespace simpvol {

/// An (n-1)-face of a simplex: `face` is the index of the opposite vertex.
struct FaceRef {
  int simplex = 0;
  int face = 0;

  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// Pairing of two codimension-one faces. Vertex v of `a.simplex` is identified
/// with vertex map[v] of `b.simplex`; map[a.face] == b.face, so the restriction to
/// the face is the affine identification.
struct Gluing {
  FaceRef a;
  FaceRef b;
  Permutation map;

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// Finitely many n-simplices with pairings of their (n-1)-faces.
///
/// The constructor only canonicalises storage: each gluing is flipped so that
/// a < b (when its map is a permutation) and the list is sorted. Structural
/// checks live in validate(); every other operation requires a valid input and
/// throws std::invalid_argument otherwise.
class Pseudomanifold {
 public:
  Pseudomanifold(int dimension, int simplex_count, std::vector<Gluing> gluings = {});

  int dimension() const { return dimension_; }
  int simplex_count() const { return simplex_count_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  std::size_t gluing_count() const { return gluings_.size(); }

  friend bool operator==(const Pseudomanifold&, const Pseudomanifold&) = default;

 private:
  int dimension_;
  int simplex_count_;
  std::vector<Gluing> gluings_;
};

enum class DiagnosticCode {
  bad_dimension,
  bad_simplex_count,
  simplex_out_of_range,
  face_out_of_range,
  bad_map_length,
  map_not_permutation,
  map_face_mismatch,
  self_gluing,
  face_in_two_pairs,
  non_canonical_order,
};

struct Diagnostic {
  DiagnosticCode code;
  std::string message;
};

/// One diagnostic per violated structural rule; empty for valid input.
std::vector<Diagnostic> validate(const Pseudomanifold& p);

bool is_valid(const Pseudomanifold& p);

/// Throws InvalidPseudomanifold carrying the diagnostics when `p` is not valid.
void require_valid(const Pseudomanifold& p);

class InvalidPseudomanifold : public std::invalid_argument {
 public:
  explicit InvalidPseudomanifold(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Thrown when gluing data is structurally valid but cannot be assembled into
/// the requested object (e.g. an unclosable boundary ridge).
class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The face glued to a given face, with the vertex map from the given simplex.
struct Neighbour {
  FaceRef face;
  Permutation map;
};

/// Per-face lookup of the gluing data of a valid pseudomanifold.
class GluingTable {
 public:
  explicit GluingTable(const Pseudomanifold& p);

  const std::optional<Neighbour>& neighbour(FaceRef f) const {
    return slots_[static_cast<std::size_t>(f.simplex) * (dimension_ + 1) + f.face];
  }
  bool is_boundary(FaceRef f) const { return !neighbour(f).has_value(); }
  int dimension() const { return dimension_; }
  int simplex_count() const { return simplex_count_; }

 private:
  int dimension_;
  int simplex_count_;
  std::vector<std::optional<Neighbour>> slots_;
};

struct OrientationResult {
  /// Per-simplex signs ε_i with every gluing orientation-reversing; empty when
  /// nonorientable.
  std::optional<std::vector<int>> signs;
  /// Indices into gluings() of a cycle whose sign product is inconsistent.
  std::vector<std::size_t> witness;

  bool orientable() const { return signs.has_value(); }
};

/// Relative sign ε_a·ε_b a gluing forces on the two simplices it joins.
int gluing_relative_sign(const Gluing& g);

OrientationResult orientability(const Pseudomanifold& p);

std::vector<Pseudomanifold> connected_components(const Pseudomanifold& p);

struct DualGraphSummary {
  int vertices = 0;
  int edges = 0;
  int euler_characteristic = 0;
  int components = 0;
};

DualGraphSummary dual_graph(const Pseudomanifold& p);

/// t[i] = number of simplices with exactly i unglued (n-1)-faces, i = 0..n+1.
struct BoundaryProfile {
  std::vector<int> t;

  int boundary_face_count() const;
  int total() const;
};

BoundaryProfile boundary_profile(const Pseudomanifold& p);

/// Removes a simplex with exactly one glued face; its neighbour face becomes free.
Pseudomanifold elide_pendant_simplex(const Pseudomanifold& p, int simplex);

/// Disjoint union; the simplices of `second` follow those of `first`.
Pseudomanifold disjoint_union(const Pseudomanifold& first, const Pseudomanifold& second);

}  // namespace simpvol
