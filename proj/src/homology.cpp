#include "simpvol/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "simpvol/face_classes.hpp"

namespace simpvol {

namespace {

using boost::multiprecision::abs;

// Smallest nonzero |entry| in the block [from, rows) × [from, cols).
bool find_pivot(const IntegerMatrix& m, std::size_t from, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  BigInt best;
  for (std::size_t r = from; r < m.size(); ++r)
    for (std::size_t c = from; c < m[r].size(); ++c) {
      if (m[r][c] == 0) continue;
      BigInt a = abs(m[r][c]);
      if (!found || a < best) {
        best = a;
        pr = r;
        pc = c;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

void swap_columns(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::vector<BigInt> diagonal;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    std::swap(m[t], m[pr]);
    swap_columns(m, t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        const BigInt q = m[r][t] / m[t][t];
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c)
            if (m[t][c] != 0) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        const BigInt q = m[t][c] / m[t][t];
        if (q != 0)
          for (std::size_t r = t; r < rows; ++r)
            if (m[r][t] != 0) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (clean) break;
      // A remainder survived: move the smallest entry of row/column t to the pivot.
      std::size_t br = t, bc = t;
      BigInt best = abs(m[t][t]);
      for (std::size_t r = t + 1; r < rows; ++r)
        if (m[r][t] != 0 && abs(m[r][t]) < best) best = abs(m[r][t]), br = r, bc = t;
      for (std::size_t c = t + 1; c < cols; ++c)
        if (m[t][c] != 0 && abs(m[t][c]) < best) best = abs(m[t][c]), br = t, bc = c;
      std::swap(m[t], m[br]);
      swap_columns(m, t, bc);
    }
    diagonal.push_back(abs(m[t][t]));
  }

  // Diagonal entries → invariant factors via pairwise (gcd, lcm).
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      const BigInt g = boost::multiprecision::gcd(diagonal[i], diagonal[j]);
      const BigInt l = diagonal[i] / g * diagonal[j];
      diagonal[i] = g;
      diagonal[j] = l;
    }
  return SmithForm{static_cast<int>(diagonal.size()), std::move(diagonal)};
}

Pseudomanifold barycentric_subdivision(const Pseudomanifold& p) {
  const GluingTable table(p);
  const int n = p.dimension();
  std::vector<Permutation> flags;
  std::map<Permutation, int> flag_index;
  for (Permutation f = identity_permutation(n + 1);;) {
    flag_index[f] = static_cast<int>(flags.size());
    flags.push_back(f);
    if (!std::next_permutation(f.begin(), f.end())) break;
  }
  const int per_simplex = static_cast<int>(flags.size());
  const Permutation id = identity_permutation(n + 1);

  std::vector<Gluing> gluings;
  for (int i = 0; i < p.simplex_count(); ++i) {
    for (int r = 0; r < per_simplex; ++r) {
      const FaceRef here_base{i * per_simplex + r, 0};
      // Inner facets: swapping consecutive entries changes only one face of the flag.
      for (int k = 0; k < n; ++k) {
        Permutation other = flags[r];
        std::swap(other[k], other[k + 1]);
        const int r2 = flag_index.at(other);
        if (r < r2) gluings.push_back({{here_base.simplex, k}, {i * per_simplex + r2, k}, id});
      }
      // Outer facet: lies in the original face opposite flags[r][n].
      const auto& nb = table.neighbour({i, flags[r][n]});
      if (!nb) continue;
      const int r2 = flag_index.at(compose(nb->map, flags[r]));
      const FaceRef here{here_base.simplex, n};
      const FaceRef there{nb->face.simplex * per_simplex + r2, n};
      if (here < there) gluings.push_back({here, there, id});
    }
  }
  return Pseudomanifold(n, p.simplex_count() * per_simplex, std::move(gluings));
}

IntegerMatrix boundary_matrix(const Pseudomanifold& p, int degree) {
  const FaceClassTable classes(p);
  if (!classes.all_rigid())
    throw std::invalid_argument("boundary_matrix: some face is identified with itself nontrivially");
  if (degree < 1 || degree > p.dimension()) throw std::invalid_argument("boundary_matrix: degree out of range");

  IntegerMatrix m(static_cast<std::size_t>(classes.count(degree - 1)),
                  std::vector<BigInt>(static_cast<std::size_t>(classes.count(degree))));
  for (int c = 0; c < classes.count(degree); ++c) {
    const Face& rep = classes.representative(degree, c);
    const auto verts = members(rep.vertices);
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const Face facet{rep.simplex, rep.vertices & ~bit(verts[k])};
      const int s = (k % 2 == 0 ? 1 : -1) * classes.orientation(facet);
      m[classes.class_of(facet)][c] += s;
    }
  }
  return m;
}

HomologyGroup homology(const Pseudomanifold& p, int degree) {
  require_valid(p);
  const int n = p.dimension();
  if (degree < 0 || degree > n) return {};
  const FaceClassTable classes(p);
  if (!classes.all_rigid()) return homology(barycentric_subdivision(p), degree);

  const int cells = classes.count(degree);
  const int incoming_rank = degree >= 1 ? smith_normal_form(boundary_matrix(p, degree)).rank : 0;
  HomologyGroup h;
  int outgoing_rank = 0;
  if (degree + 1 <= n) {
    const SmithForm s = smith_normal_form(boundary_matrix(p, degree + 1));
    outgoing_rank = s.rank;
    for (const auto& d : s.invariant_factors)
      if (d > 1) h.torsion.push_back(d);
  }
  h.betti = cells - incoming_rank - outgoing_rank;
  return h;
}

}  // namespace simpvol
