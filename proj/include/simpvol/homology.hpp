#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simpvol/pseudomanifold.hpp"

namespace simpvol {

using BigInt = boost::multiprecision::cpp_int;
using IntegerMatrix = std::vector<std::vector<BigInt>>;

struct HomologyGroup {
  int betti = 0;
  /// Invariant factors greater than one, ascending, each dividing the next.
  std::vector<BigInt> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct SmithForm {
  int rank = 0;
  /// Nonzero invariant factors d_1 | d_2 | ... (all positive).
  std::vector<BigInt> invariant_factors;
};

/// Invariant factors of an integer matrix (rows × cols, row-major).
SmithForm smith_normal_form(IntegerMatrix m);

/// First barycentric subdivision. Simplex i·(n+1)! + r corresponds to the flag
/// of faces of simplex i spanned by the prefixes of the r-th vertex ordering;
/// every gluing map of the result is the identity.
Pseudomanifold barycentric_subdivision(const Pseudomanifold& p);

/// Integral homology of the realization in degree d, from the cellular chain
/// complex of face classes. Falls back to the barycentric subdivision when some
/// face is identified with itself by a nontrivial vertex map.
HomologyGroup homology(const Pseudomanifold& p, int degree);

/// Cellular boundary matrix ∂_d : C_d → C_{d−1} (rows index (d−1)-classes).
/// Requires all face classes to be rigid.
IntegerMatrix boundary_matrix(const Pseudomanifold& p, int degree);

}  // namespace simpvol
