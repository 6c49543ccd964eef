#pragma once

#include <vector>

#include "simpvol/pseudomanifold.hpp"

namespace simpvol {

/// A k-face of one simplex, named by its vertex subset.
struct Face {
  int simplex = 0;
  VertexSet vertices = 0;

  friend auto operator<=>(const Face&, const Face&) = default;
};

/// Equivalence classes of faces of every dimension under the identifications
/// generated by the gluings.
///
/// Each class is represented by its lowest (simplex, vertex set) member. A
/// class is rigid when every chain of identifications returning to a member
/// composes to the identity on its vertices; orientation() then gives the sign
/// of the ascending vertex order of a member relative to the representative.
class FaceClassTable {
 public:
  explicit FaceClassTable(const Pseudomanifold& p);

  int dimension() const { return dimension_; }
  int count(int d) const { return static_cast<int>(classes_[d].size()); }
  /// f_0, ..., f_n.
  std::vector<int> f_vector() const;

  const std::vector<Face>& members(int d, int cls) const { return classes_[d][cls]; }
  const Face& representative(int d, int cls) const { return classes_[d][cls].front(); }

  int class_of(const Face& f) const;
  int orientation(const Face& f) const;

  bool rigid(int d, int cls) const { return rigid_[d][cls]; }
  /// True iff every class of every dimension is rigid.
  bool all_rigid() const;

  /// Alternating count of classes; the realization's χ only when all_rigid().
  int euler_characteristic() const;

 private:
  std::size_t slot(const Face& f) const;

  int dimension_;
  std::vector<std::vector<std::vector<Face>>> classes_;
  std::vector<std::vector<bool>> rigid_;
  std::vector<int> class_of_;
  std::vector<int> orientation_;
};

/// Euler characteristic of the realization.
int euler_characteristic(const Pseudomanifold& p);

}  // namespace simpvol
