#include "simpvol/pseudomanifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace simpvol {

namespace {

constexpr int kMaxDimension = 15;

std::string describe(FaceRef f) {
  std::ostringstream os;
  os << '(' << f.simplex << ',' << f.face << ')';
  return os.str();
}

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "invalid pseudomanifold";
  for (const auto& d : diagnostics) out += "; " + d.message;
  return out;
}

bool in_range(const Pseudomanifold& p, FaceRef f) {
  return f.simplex >= 0 && f.simplex < p.simplex_count() && f.face >= 0 && f.face <= p.dimension();
}

}  // namespace

Pseudomanifold::Pseudomanifold(int dimension, int simplex_count, std::vector<Gluing> gluings)
    : dimension_(dimension), simplex_count_(simplex_count), gluings_(std::move(gluings)) {
  for (auto& g : gluings_) {
    if (g.b < g.a && is_permutation(g.map)) {
      std::swap(g.a, g.b);
      g.map = inverse(g.map);
    }
  }
  std::stable_sort(gluings_.begin(), gluings_.end(), [](const Gluing& x, const Gluing& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
}

InvalidPseudomanifold::InvalidPseudomanifold(std::vector<Diagnostic> diagnostics)
    : std::invalid_argument(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::vector<Diagnostic> validate(const Pseudomanifold& p) {
  std::vector<Diagnostic> out;
  if (p.dimension() < 1 || p.dimension() > kMaxDimension) {
    out.push_back({DiagnosticCode::bad_dimension,
                   "dimension " + std::to_string(p.dimension()) + " outside [1, " +
                       std::to_string(kMaxDimension) + "]"});
    return out;
  }
  if (p.simplex_count() < 0) {
    out.push_back({DiagnosticCode::bad_simplex_count,
                   "negative simplex count " + std::to_string(p.simplex_count())});
    return out;
  }

  std::map<FaceRef, int> uses;
  const int n = p.dimension();
  for (std::size_t k = 0; k < p.gluings().size(); ++k) {
    const Gluing& g = p.gluings()[k];
    const std::string where = "gluing " + std::to_string(k) + " " + describe(g.a) + "-" + describe(g.b);
    bool indices_ok = true;
    for (FaceRef f : {g.a, g.b}) {
      if (f.simplex < 0 || f.simplex >= p.simplex_count()) {
        out.push_back({DiagnosticCode::simplex_out_of_range,
                       where + ": simplex index " + std::to_string(f.simplex) + " out of range"});
        indices_ok = false;
      }
      if (f.face < 0 || f.face > n) {
        out.push_back({DiagnosticCode::face_out_of_range,
                       where + ": face index " + std::to_string(f.face) + " out of range"});
        indices_ok = false;
      }
    }
    if (g.a == g.b) out.push_back({DiagnosticCode::self_gluing, where + ": face glued to itself"});

    if (g.map.size() != static_cast<std::size_t>(n + 1)) {
      out.push_back({DiagnosticCode::bad_map_length,
                     where + ": map has length " + std::to_string(g.map.size()) + ", expected " +
                         std::to_string(n + 1)});
    } else if (!is_permutation(g.map)) {
      out.push_back({DiagnosticCode::map_not_permutation, where + ": map is not a permutation"});
    } else if (indices_ok && g.map[g.a.face] != g.b.face) {
      out.push_back({DiagnosticCode::map_face_mismatch,
                     where + ": map sends vertex " + std::to_string(g.a.face) + " to " +
                         std::to_string(g.map[g.a.face]) + ", expected " + std::to_string(g.b.face)});
    }

    if (in_range(p, g.a)) ++uses[g.a];
    if (in_range(p, g.b) && g.b != g.a) ++uses[g.b];
  }
  for (const auto& [face, count] : uses) {
    if (count > 1)
      out.push_back({DiagnosticCode::face_in_two_pairs,
                     "face " + describe(face) + " in " + std::to_string(count) + " pairs"});
  }
  return out;
}

bool is_valid(const Pseudomanifold& p) { return validate(p).empty(); }

void require_valid(const Pseudomanifold& p) {
  auto diagnostics = validate(p);
  if (!diagnostics.empty()) throw InvalidPseudomanifold(std::move(diagnostics));
}

GluingTable::GluingTable(const Pseudomanifold& p)
    : dimension_(p.dimension()), simplex_count_(p.simplex_count()) {
  require_valid(p);
  slots_.resize(static_cast<std::size_t>(simplex_count_) * (dimension_ + 1));
  for (const auto& g : p.gluings()) {
    slots_[static_cast<std::size_t>(g.a.simplex) * (dimension_ + 1) + g.a.face] = Neighbour{g.b, g.map};
    slots_[static_cast<std::size_t>(g.b.simplex) * (dimension_ + 1) + g.b.face] =
        Neighbour{g.a, inverse(g.map)};
  }
}

int gluing_relative_sign(const Gluing& g) { return -sign(g.map); }

OrientationResult orientability(const Pseudomanifold& p) {
  require_valid(p);
  const int k = p.simplex_count();
  // Spanning forest of the dual graph; each vertex remembers the gluing to its parent.
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(k));
  for (std::size_t e = 0; e < p.gluings().size(); ++e) {
    incident[p.gluings()[e].a.simplex].push_back(e);
    if (p.gluings()[e].b.simplex != p.gluings()[e].a.simplex)
      incident[p.gluings()[e].b.simplex].push_back(e);
  }
  std::vector<int> signs(static_cast<std::size_t>(k), 0);
  std::vector<std::optional<std::size_t>> parent_edge(static_cast<std::size_t>(k));
  std::vector<int> parent(static_cast<std::size_t>(k), -1);

  auto path_to_root = [&](int v) {
    std::vector<std::size_t> path;
    for (; parent_edge[v]; v = parent[v]) path.push_back(*parent_edge[v]);
    return path;
  };

  for (int root = 0; root < k; ++root) {
    if (signs[root] != 0) continue;
    signs[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::size_t e : incident[v]) {
        const Gluing& g = p.gluings()[e];
        const int other = g.a.simplex == v ? g.b.simplex : g.a.simplex;
        const int wanted = signs[v] * gluing_relative_sign(g);
        if (signs[other] == 0) {
          signs[other] = wanted;
          parent[other] = v;
          parent_edge[other] = e;
          stack.push_back(other);
        } else if (signs[other] != wanted) {
          // Cycle: tree path from each endpoint to their common ancestor, closed by e.
          auto pa = path_to_root(g.a.simplex);
          auto pb = path_to_root(g.b.simplex);
          while (!pa.empty() && !pb.empty() && pa.back() == pb.back()) {
            pa.pop_back();
            pb.pop_back();
          }
          OrientationResult bad;
          bad.witness = pa;
          bad.witness.insert(bad.witness.end(), pb.rbegin(), pb.rend());
          bad.witness.push_back(e);
          return bad;
        }
      }
    }
  }
  return OrientationResult{std::move(signs), {}};
}

namespace {

std::vector<int> component_labels(const Pseudomanifold& p, int& count) {
  std::vector<int> parent(static_cast<std::size_t>(p.simplex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : p.gluings()) parent[find(g.a.simplex)] = find(g.b.simplex);
  std::vector<int> label(parent.size(), -1);
  std::vector<int> root_label(parent.size(), -1);
  count = 0;
  for (int i = 0; i < p.simplex_count(); ++i) {
    int r = find(i);
    if (root_label[r] < 0) root_label[r] = count++;
    label[i] = root_label[r];
  }
  return label;
}

}  // namespace

std::vector<Pseudomanifold> connected_components(const Pseudomanifold& p) {
  require_valid(p);
  int count = 0;
  const auto label = component_labels(p, count);
  std::vector<int> new_index(label.size());
  std::vector<int> sizes(static_cast<std::size_t>(count), 0);
  for (std::size_t i = 0; i < label.size(); ++i) new_index[i] = sizes[label[i]]++;

  std::vector<std::vector<Gluing>> gluings(static_cast<std::size_t>(count));
  for (const auto& g : p.gluings()) {
    Gluing h = g;
    h.a.simplex = new_index[g.a.simplex];
    h.b.simplex = new_index[g.b.simplex];
    gluings[label[g.a.simplex]].push_back(std::move(h));
  }
  std::vector<Pseudomanifold> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) out.emplace_back(p.dimension(), sizes[c], std::move(gluings[c]));
  return out;
}

DualGraphSummary dual_graph(const Pseudomanifold& p) {
  require_valid(p);
  DualGraphSummary s;
  s.vertices = p.simplex_count();
  s.edges = static_cast<int>(p.gluing_count());
  s.euler_characteristic = s.vertices - s.edges;
  component_labels(p, s.components);
  return s;
}

int BoundaryProfile::boundary_face_count() const {
  int c = 0;
  for (std::size_t i = 0; i < t.size(); ++i) c += static_cast<int>(i) * t[i];
  return c;
}

int BoundaryProfile::total() const { return std::accumulate(t.begin(), t.end(), 0); }

BoundaryProfile boundary_profile(const Pseudomanifold& p) {
  require_valid(p);
  const int n = p.dimension();
  std::vector<int> glued(static_cast<std::size_t>(p.simplex_count()), 0);
  for (const auto& g : p.gluings()) {
    ++glued[g.a.simplex];
    ++glued[g.b.simplex];
  }
  BoundaryProfile profile{std::vector<int>(static_cast<std::size_t>(n + 2), 0)};
  for (int used : glued) ++profile.t[n + 1 - used];
  return profile;
}

Pseudomanifold elide_pendant_simplex(const Pseudomanifold& p, int simplex) {
  require_valid(p);
  if (simplex < 0 || simplex >= p.simplex_count())
    throw std::invalid_argument("elide_pendant_simplex: simplex index out of range");
  int glued = 0;
  for (const auto& g : p.gluings()) glued += (g.a.simplex == simplex) + (g.b.simplex == simplex);
  if (glued != 1)
    throw std::invalid_argument("elide_pendant_simplex: simplex " + std::to_string(simplex) + " has " +
                                std::to_string(glued) + " glued faces, expected exactly 1");

  auto shift = [simplex](int i) { return i > simplex ? i - 1 : i; };
  std::vector<Gluing> kept;
  for (const auto& g : p.gluings()) {
    if (g.a.simplex == simplex || g.b.simplex == simplex) continue;
    Gluing h = g;
    h.a.simplex = shift(g.a.simplex);
    h.b.simplex = shift(g.b.simplex);
    kept.push_back(std::move(h));
  }
  return Pseudomanifold(p.dimension(), p.simplex_count() - 1, std::move(kept));
}

Pseudomanifold disjoint_union(const Pseudomanifold& first, const Pseudomanifold& second) {
  if (first.dimension() != second.dimension())
    throw std::invalid_argument("disjoint_union: dimensions differ");
  std::vector<Gluing> gluings = first.gluings();
  for (Gluing g : second.gluings()) {
    g.a.simplex += first.simplex_count();
    g.b.simplex += first.simplex_count();
    gluings.push_back(std::move(g));
  }
  return Pseudomanifold(first.dimension(), first.simplex_count() + second.simplex_count(),
                        std::move(gluings));
}

}  // namespace simpvol
