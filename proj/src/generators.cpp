#include "simpvol/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace simpvol {

namespace {

/// Simplices whose vertices carry names; faces are glued by matching names.
class NamedComplex {
 public:
  using Name = long long;

  explicit NamedComplex(int dimension) : dimension_(dimension) {}

  int add(std::vector<Name> names) {
    simplices_.push_back(std::move(names));
    return static_cast<int>(simplices_.size()) - 1;
  }

  std::vector<Name> face_names(FaceRef f) const {
    std::vector<Name> out;
    for (int v = 0; v <= dimension_; ++v)
      if (v != f.face) out.push_back(simplices_[f.simplex][v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Glue f to g; `rename` carries names of f's simplex to names of g's simplex.
  template <typename Rename>
  void glue(FaceRef f, FaceRef g, Rename rename) {
    Permutation map(static_cast<std::size_t>(dimension_ + 1));
    const auto& target = simplices_[g.simplex];
    for (int v = 0; v <= dimension_; ++v) {
      if (v == f.face) {
        map[v] = g.face;
        continue;
      }
      const auto it = std::find(target.begin(), target.end(), rename(simplices_[f.simplex][v]));
      if (it == target.end()) throw std::logic_error("NamedComplex::glue: faces do not match");
      map[v] = static_cast<int>(it - target.begin());
    }
    gluings_.push_back({f, g, std::move(map)});
  }

  /// Glues every pair of faces with equal name sets.
  void glue_matching_faces() {
    std::map<std::vector<Name>, std::vector<FaceRef>> by_names;
    for (int i = 0; i < static_cast<int>(simplices_.size()); ++i)
      for (int j = 0; j <= dimension_; ++j) by_names[face_names({i, j})].push_back({i, j});
    for (const auto& [names, faces] : by_names) {
      if (faces.size() > 2) throw std::logic_error("NamedComplex: face shared by more than two simplices");
      if (faces.size() == 2) glue(faces[0], faces[1], [](Name x) { return x; });
    }
  }

  std::optional<FaceRef> find_face(std::vector<Name> names) const {
    std::sort(names.begin(), names.end());
    for (int i = 0; i < static_cast<int>(simplices_.size()); ++i)
      for (int j = 0; j <= dimension_; ++j)
        if (face_names({i, j}) == names) return FaceRef{i, j};
    return std::nullopt;
  }

  int simplex_count() const { return static_cast<int>(simplices_.size()); }

  Pseudomanifold build() const { return Pseudomanifold(dimension_, simplex_count(), gluings_); }

 private:
  int dimension_;
  std::vector<std::vector<Name>> simplices_;
  std::vector<Gluing> gluings_;
};

/// Staircase triangulation of T×[0,1] along the vertex order x < y < z.
/// Vertex names are level*stride + corner.
template <typename NameOf>
void add_prism(NamedComplex& c, int x, int y, int z, NameOf name) {
  c.add({name(x, 0), name(y, 0), name(z, 0), name(z, 1)});
  c.add({name(x, 0), name(y, 0), name(y, 1), name(z, 1)});
  c.add({name(x, 0), name(x, 1), name(y, 1), name(z, 1)});
}

/// Five-tetrahedron triangulation of Q×[0,1]: the central tetrahedron on the
/// sources at level 0 and the sinks at level 1, plus four corner tetrahedra.
template <typename NameOf>
void add_cube(NamedComplex& c, std::array<int, 2> sources, std::array<int, 2> sinks, NameOf name) {
  const auto [s0, s1] = sources;
  const auto [k0, k1] = sinks;
  c.add({name(s0, 0), name(s1, 0), name(k0, 1), name(k1, 1)});
  for (int k : sinks) c.add({name(k, 0), name(s0, 0), name(s1, 0), name(k, 1)});
  for (int s : sources) c.add({name(s, 1), name(k0, 1), name(k1, 1), name(s, 0)});
}

// Parity union-find over edge variables.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int size) : parent_(static_cast<std::size_t>(size)), parity_(parent_.size(), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) {
    int parity = 0;
    int root = x;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    return {root, parity};
  }

  /// Imposes value(x) XOR value(y) == relation; false on contradiction.
  bool unite(int x, int y, int relation) {
    const auto [rx, px] = find(x);
    const auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == relation;
    parent_[rx] = ry;
    parity_[rx] = px ^ py ^ relation;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

}  // namespace

Pseudomanifold cone_over_simplex_boundary(int n) {
  if (n < 2) throw std::invalid_argument("cone_over_simplex_boundary: n must be at least 2");
  std::vector<Gluing> gluings;
  for (int i = 0; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k) {
      Permutation map = identity_permutation(n + 1);
      std::swap(map[i], map[k]);
      gluings.push_back({{i, k}, {k, i}, map});
    }
  return Pseudomanifold(n, n + 1, std::move(gluings));
}

Pseudomanifold solid_torus() {
  // Found by exhaustive search over all self-gluings of one tetrahedron (see tests).
  return Pseudomanifold(3, 1, {{{0, 0}, {0, 1}, {1, 2, 3, 0}}});
}

Pseudomanifold add_one_handle(const Pseudomanifold& p, FaceRef face_a, FaceRef face_b) {
  const GluingTable table(p);
  if (p.dimension() != 3) throw std::invalid_argument("add_one_handle: dimension must be 3");
  for (FaceRef f : {face_a, face_b}) {
    if (f.simplex < 0 || f.simplex >= p.simplex_count() || f.face < 0 || f.face > 3)
      throw std::invalid_argument("add_one_handle: face index out of range");
    if (!table.is_boundary(f)) throw std::invalid_argument("add_one_handle: face is already glued");
  }
  if (face_a == face_b) throw std::invalid_argument("add_one_handle: attaching faces coincide");

  // Prism vertices: bottom a0 a1 a2 = names 0 1 2, top b0 b1 b2 = names 3 4 5.
  NamedComplex prism(3);
  add_prism(prism, 0, 1, 2, [](int corner, int level) { return NamedComplex::Name{3 * level + corner}; });
  const int base = p.simplex_count();
  std::vector<Gluing> inner;
  {
    prism.glue_matching_faces();
    const Pseudomanifold built = prism.build();
    for (Gluing g : built.gluings()) {
      g.a.simplex += base;
      g.b.simplex += base;
      inner.push_back(std::move(g));
    }
  }
  const FaceRef bottom{base, 3};   // [a0 a1 a2 | b2]
  const FaceRef top{base + 2, 0};  // [a0 | b0 b1 b2]

  auto attach = [](FaceRef prism_face, FaceRef target, const std::array<int, 3>& order) {
    // order[k]: which vertex of the target face (ascending) receives the k-th vertex of the prism face.
    std::vector<int> target_vertices;
    for (int v = 0; v < 4; ++v)
      if (v != target.face) target_vertices.push_back(v);
    Permutation map(4);
    int k = 0;
    for (int v = 0; v < 4; ++v) {
      if (v == prism_face.face) {
        map[v] = target.face;
      } else {
        map[v] = target_vertices[order[k++]];
      }
    }
    return Gluing{prism_face, target, map};
  };

  const bool keep_orientable = orientability(p).orientable();
  std::array<int, 3> order{0, 1, 2};
  std::optional<Pseudomanifold> first;
  do {
    std::vector<Gluing> gluings = p.gluings();
    gluings.insert(gluings.end(), inner.begin(), inner.end());
    gluings.push_back(attach(bottom, face_a, {0, 1, 2}));
    gluings.push_back(attach(top, face_b, order));
    Pseudomanifold result(3, base + 3, std::move(gluings));
    if (!keep_orientable || orientability(result).orientable()) return result;
    if (!first) first = std::move(result);
  } while (std::next_permutation(order.begin(), order.end()));
  return *first;
}

Pseudomanifold handlebody(int genus) {
  if (genus < 1) throw std::invalid_argument("handlebody: genus must be at least 1");
  Pseudomanifold h = solid_torus();
  for (int added = 1; added < genus; ++added) {
    // Attach to the first two free faces in (simplex, face) order.
    const GluingTable table(h);
    std::vector<FaceRef> free_faces;
    for (int i = 0; i < h.simplex_count(); ++i)
      for (int j = 0; j < 4; ++j)
        if (table.is_boundary({i, j})) free_faces.push_back({i, j});
    h = add_one_handle(h, free_faces[0], free_faces[1]);
  }
  return h;
}

bool PolygonScheme::points(int x, int y) const {
  for (const auto& e : edges) {
    if (e.from == x && e.to == y) return true;
    if (e.from == y && e.to == x) return false;
  }
  throw std::invalid_argument("PolygonScheme::points: corners are not joined by an edge");
}

int PolygonScheme::paired_corner(int side, int corner) const {
  const int two_g = 2 * genus;
  const int base = side % two_g;
  const int lo = base, hi = (base + 1) % corners;
  const int plo = two_g + base, phi = (two_g + base + 1) % corners;
  // corner lo <-> phi, hi <-> plo
  if (corner == lo) return phi;
  if (corner == hi) return plo;
  if (corner == phi) return lo;
  if (corner == plo) return hi;
  throw std::invalid_argument("PolygonScheme::paired_corner: corner not on side");
}

PolygonScheme polygon_scheme(int genus) {
  if (genus < 1) throw std::invalid_argument("polygon_scheme: genus must be at least 1");
  PolygonScheme s;
  s.genus = genus;
  s.corners = 4 * genus;
  const int m = s.corners;
  const int two_g = 2 * genus;
  for (int k = 0; k < two_g; ++k) s.side_pairs.push_back({k, two_g + k});

  // Decomposition. Colouring corner c by parity, flipped on the second half,
  // makes every side pair except (2g−1, 4g−1) join opposite colours; those two
  // sides get their own triangles and the remaining alternating polygon is cut
  // into quads by a zigzag fan.
  std::vector<std::array<int, 2>> diagonals;
  if (genus == 1) {
    s.triangles = {{{0, 1, 2}}, {{0, 2, 3}}};
    diagonals = {{0, 2}};
  } else {
    s.triangles = {{{two_g - 2, two_g - 1, two_g}}, {{m - 1, 0, 1}}};
    diagonals = {{two_g - 2, two_g}, {1, m - 1}};
    std::vector<int> rest;
    for (int c = 1; c < m; ++c)
      if (c != two_g - 1) rest.push_back(c);
    for (std::size_t q = 1; q + 2 < rest.size(); q += 2) {
      s.quads.push_back({rest[0], rest[q], rest[q + 1], rest[q + 2]});
      if (q + 3 < rest.size()) diagonals.push_back({rest[0], rest[q + 2]});
    }
  }

  // Orientation variables: side classes 0..2g−1 (true = k → k+1), then
  // diagonals (true = first → second).
  const int variables = two_g + static_cast<int>(diagonals.size());
  auto edge_term = [&](int x, int y) -> std::pair<int, int> {
    // Returns (variable, flip) with "x → y" == value(variable) XOR flip.
    if ((x + 1) % m == y || (y + 1) % m == x) {
      const bool forward = (x + 1) % m == y;
      const int side = forward ? x : y;
      const int cls = side % two_g;
      const int flip = (side >= two_g ? 1 : 0) ^ (forward ? 0 : 1);
      return {cls, flip};
    }
    for (std::size_t d = 0; d < diagonals.size(); ++d) {
      if (diagonals[d][0] == x && diagonals[d][1] == y) return {two_g + static_cast<int>(d), 0};
      if (diagonals[d][0] == y && diagonals[d][1] == x) return {two_g + static_cast<int>(d), 1};
    }
    throw std::logic_error("polygon_scheme: unknown edge");
  };

  ParityUnionFind uf(variables);
  for (const auto& q : s.quads) {
    // Consecutive edges of the 4-cycle point in opposite traversal directions.
    for (int t = 0; t < 3; ++t) {
      const auto [va, fa] = edge_term(q[t], q[t + 1]);
      const auto [vb, fb] = edge_term(q[t + 1], q[(t + 2) % 4]);
      if (!uf.unite(va, vb, 1 ^ fa ^ fb))
        throw std::runtime_error("polygon_scheme: no alternating orientation for genus " + std::to_string(genus));
    }
  }

  // Only the triangle edges remain constrained; search over their free roots.
  std::vector<int> roots;
  for (const auto& t : s.triangles)
    for (int e = 0; e < 3; ++e) {
      const int root = uf.find(edge_term(t[e], t[(e + 1) % 3]).first).first;
      if (std::find(roots.begin(), roots.end(), root) == roots.end()) roots.push_back(root);
    }
  std::vector<int> value(static_cast<std::size_t>(variables), 0);
  bool solved = false;
  for (unsigned mask = 0; mask < (1u << roots.size()) && !solved; ++mask) {
    std::map<int, int> root_value;
    for (std::size_t r = 0; r < roots.size(); ++r) root_value[roots[r]] = (mask >> r) & 1u;
    for (int v = 0; v < variables; ++v) {
      const auto [root, parity] = uf.find(v);
      const auto it = root_value.find(root);
      value[v] = (it == root_value.end() ? 0 : it->second) ^ parity;
    }
    solved = true;
    for (const auto& t : s.triangles) {
      int forward = 0;
      for (int e = 0; e < 3; ++e) {
        const auto [var, flip] = edge_term(t[e], t[(e + 1) % 3]);
        forward += value[var] ^ flip;
      }
      if (forward == 0 || forward == 3) solved = false;  // directed 3-cycle
    }
  }
  if (!solved) throw std::runtime_error("polygon_scheme: no acyclic triangle orientation for genus " + std::to_string(genus));

  auto orient = [&](int x, int y) {
    const auto [var, flip] = edge_term(x, y);
    return (value[var] ^ flip) ? OrientedEdge{x, y} : OrientedEdge{y, x};
  };
  for (int side = 0; side < m; ++side) s.edges.push_back(orient(side, (side + 1) % m));
  for (const auto& d : diagonals) s.edges.push_back(orient(d[0], d[1]));
  return s;
}

Pseudomanifold product_surface_interval(int genus) {
  if (genus < 1) throw std::invalid_argument("product_surface_interval: genus must be at least 1");
  const PolygonScheme scheme = polygon_scheme(genus);
  const int m = scheme.corners;
  auto name = [m](int corner, int level) { return NamedComplex::Name{level} * m + corner; };

  NamedComplex c(3);
  for (const auto& q : scheme.quads) {
    if (scheme.points(q[0], q[1]))
      add_cube(c, {q[0], q[2]}, {q[1], q[3]}, name);
    else
      add_cube(c, {q[1], q[3]}, {q[0], q[2]}, name);
  }
  for (const auto& t : scheme.triangles) {
    std::array<int, 3> order = t;
    // Sort by "number of incoming edges": source, middle, sink.
    auto incoming = [&](int x) {
      int count = 0;
      for (int y : t)
        if (y != x && scheme.points(y, x)) ++count;
      return count;
    };
    std::sort(order.begin(), order.end(), [&](int x, int y) { return incoming(x) < incoming(y); });
    add_prism(c, order[0], order[1], order[2], name);
  }
  c.glue_matching_faces();

  // Vertical faces over identified polygon sides.
  for (const auto& pair : scheme.side_pairs) {
    const int side = pair[0];
    const int lo = side, hi = (side + 1) % m;
    for (const auto& names : {std::vector<NamedComplex::Name>{name(lo, 0), name(hi, 0), name(hi, 1)},
                              std::vector<NamedComplex::Name>{name(lo, 0), name(lo, 1), name(hi, 1)},
                              std::vector<NamedComplex::Name>{name(hi, 0), name(lo, 0), name(lo, 1)},
                              std::vector<NamedComplex::Name>{name(hi, 0), name(hi, 1), name(lo, 1)}}) {
      const auto face = c.find_face(names);
      if (!face) continue;
      auto rename = [&](NamedComplex::Name x) {
        const int level = static_cast<int>(x / m);
        return name(scheme.paired_corner(side, static_cast<int>(x % m)), level);
      };
      std::vector<NamedComplex::Name> image;
      for (auto x : names) image.push_back(rename(x));
      const auto target = c.find_face(image);
      if (!target) throw std::logic_error("product_surface_interval: side faces do not match");
      c.glue(*face, *target, rename);
    }
  }
  return c.build();
}

}  // namespace simpvol
