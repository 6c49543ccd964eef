#include "simpvol/permutation.hpp"

#include <bit>
#include <numeric>

namespace simpvol {

Permutation identity_permutation(int size) {
  Permutation p(static_cast<std::size_t>(size));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(std::span<const int> p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation inverse(std::span<const int> p) {
  Permutation out(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) out[p[v]] = static_cast<int>(v);
  return out;
}

Permutation compose(std::span<const int> outer, std::span<const int> inner) {
  Permutation out(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) out[v] = outer[inner[v]];
  return out;
}

int sign(std::span<const int> p) {
  // Parity from the cycle decomposition.
  std::vector<bool> seen(p.size(), false);
  int transpositions = 0;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (std::size_t v = start; !seen[v]; v = static_cast<std::size_t>(p[v])) {
      seen[v] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

VertexSet apply(std::span<const int> p, VertexSet s) {
  VertexSet out = 0;
  for (std::size_t v = 0; v < p.size(); ++v)
    if (s & bit(static_cast<int>(v))) out |= bit(p[v]);
  return out;
}

int popcount(VertexSet s) { return std::popcount(s); }

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; s != 0; ++v, s >>= 1)
    if (s & 1u) out.push_back(v);
  return out;
}

std::vector<VertexSet> subsets_of_size(int n, int size) {
  std::vector<VertexSet> out;
  for (VertexSet s = 0; s <= full_set(n); ++s)
    if (popcount(s) == size) out.push_back(s);
  return out;
}

}  // namespace simpvol
