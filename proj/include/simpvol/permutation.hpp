#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace simpvol {

/// A permutation of {0, ..., n}; entry v is the image of v.
using Permutation = std::vector<int>;

/// Vertex subset of one simplex as a bitmask (bit v set iff vertex v belongs).
using VertexSet = std::uint32_t;

Permutation identity_permutation(int size);

/// True iff `p` is a bijection of {0, ..., p.size() - 1}.
bool is_permutation(std::span<const int> p);

Permutation inverse(std::span<const int> p);

/// (outer ∘ inner)(v) = outer[inner[v]].
Permutation compose(std::span<const int> outer, std::span<const int> inner);

/// +1 for even permutations, -1 for odd ones.
int sign(std::span<const int> p);

VertexSet apply(std::span<const int> p, VertexSet s);

int popcount(VertexSet s);

/// Vertices of `s` in increasing order.
std::vector<int> members(VertexSet s);

/// All vertex subsets of {0, ..., n} with exactly `size` elements, ascending as integers.
std::vector<VertexSet> subsets_of_size(int n, int size);

constexpr VertexSet full_set(int n) { return (VertexSet{1} << (n + 1)) - 1; }

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// Label of vertex `v` inside the face opposite `omitted` (vertices relabelled 0..n-1).
constexpr int local_label(int v, int omitted) { return v < omitted ? v : v - 1; }

/// Inverse of local_label.
constexpr int global_label(int local, int omitted) { return local < omitted ? local : local + 1; }

}  // namespace simpvol
