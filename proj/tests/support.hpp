#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "simpvol/pseudomanifold.hpp"

namespace simpvol::testing {

// Random gluing of `count` n-simplices: faces are shuffled and consecutive
// ones paired with probability `density`, each with a random compatible map.
inline Pseudomanifold random_pseudomanifold(std::mt19937& rng, int n, int count, double density) {
  std::vector<FaceRef> faces;
  for (int s = 0; s < count; ++s)
    for (int f = 0; f <= n; ++f) faces.push_back({s, f});
  std::shuffle(faces.begin(), faces.end(), rng);
  std::bernoulli_distribution pair(density);
  std::vector<Gluing> gluings;
  for (std::size_t k = 0; k + 1 < faces.size(); k += 2) {
    if (!pair(rng)) continue;
    const FaceRef a = faces[k], b = faces[k + 1];
    std::vector<int> rest_from, rest_to;
    for (int v = 0; v <= n; ++v) {
      if (v != a.face) rest_from.push_back(v);
      if (v != b.face) rest_to.push_back(v);
    }
    std::shuffle(rest_to.begin(), rest_to.end(), rng);
    Permutation map(static_cast<std::size_t>(n + 1));
    map[a.face] = b.face;
    for (std::size_t q = 0; q < rest_from.size(); ++q) map[rest_from[q]] = rest_to[q];
    gluings.push_back({a, b, map});
  }
  return Pseudomanifold(n, count, std::move(gluings));
}

}  // namespace simpvol::testing
