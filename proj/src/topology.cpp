#include "simpvol/topology.hpp"

#include <map>
#include <stdexcept>

namespace simpvol {

VertexLink vertex_link(const Pseudomanifold& p, const FaceClassTable& classes, int vertex_class) {
  const int n = p.dimension();
  if (n < 2) throw std::invalid_argument("vertex_link: dimension must be at least 2");
  VertexLink out{vertex_class, Pseudomanifold(n - 1, 0), classes.members(0, vertex_class)};

  std::map<Face, int> corner_index;
  for (std::size_t c = 0; c < out.corners.size(); ++c) corner_index[out.corners[c]] = static_cast<int>(c);

  std::vector<Gluing> gluings;
  for (const auto& g : p.gluings()) {
    // Every vertex v other than the opposite one lies on the glued face, so the
    // corners at v and at map[v] share the corresponding link face.
    for (int v = 0; v <= n; ++v) {
      if (v == g.a.face) continue;
      const auto here = corner_index.find({g.a.simplex, bit(v)});
      if (here == corner_index.end()) continue;
      const int w = g.map[v];
      const int there = corner_index.at({g.b.simplex, bit(w)});
      Permutation local(static_cast<std::size_t>(n));
      for (int x = 0; x <= n; ++x)
        if (x != v) local[local_label(x, v)] = local_label(g.map[x], w);
      gluings.push_back({{here->second, local_label(g.a.face, v)}, {there, local_label(g.b.face, w)}, local});
    }
  }
  out.link = Pseudomanifold(n - 1, static_cast<int>(out.corners.size()), std::move(gluings));
  return out;
}

namespace {

int component_count(const Pseudomanifold& p) { return dual_graph(p).components; }

bool has_boundary(const Pseudomanifold& p) {
  return static_cast<int>(2 * p.gluing_count()) < p.simplex_count() * (p.dimension() + 1);
}

VertexLinkSummary summarize(const Pseudomanifold& p, const FaceClassTable& classes, int vertex_class) {
  const VertexLink link = vertex_link(p, classes, vertex_class);
  const FaceClassTable link_classes(link.link);
  VertexLinkSummary s;
  s.vertex_class = vertex_class;
  s.euler_characteristic = link_classes.euler_characteristic();
  s.connected = component_count(link.link) == 1;
  s.on_boundary = has_boundary(link.link);
  s.link_is_surface = true;
  if (link.link.dimension() >= 2) {
    for (int c = 0; c < link_classes.count(0); ++c)
      if (component_count(vertex_link(link.link, link_classes, c).link) != 1) s.link_is_surface = false;
  }
  return s;
}

}  // namespace

std::vector<VertexLinkSummary> vertex_links(const Pseudomanifold& p) {
  if (p.dimension() != 3) throw std::invalid_argument("vertex_links: dimension must be 3");
  const FaceClassTable classes(p);
  std::vector<VertexLinkSummary> out;
  for (int c = 0; c < classes.count(0); ++c) out.push_back(summarize(p, classes, c));
  return out;
}

ManifoldCheck manifold_check(const Pseudomanifold& p) {
  if (p.dimension() != 3) throw std::invalid_argument("manifold_check: dimension must be 3");
  const FaceClassTable classes(p);
  ManifoldCheck check;
  for (int c = 0; c < classes.count(0); ++c) check.links.push_back(summarize(p, classes, c));
  for (int c = 0; c < classes.count(1); ++c)
    if (!classes.rigid(1, c)) ++check.folded_edges;

  check.manifold = check.folded_edges == 0;
  for (const auto& l : check.links) {
    const int expected_chi = l.on_boundary ? 1 : 2;
    if (!l.connected || !l.link_is_surface || l.euler_characteristic != expected_chi) check.manifold = false;
  }
  return check;
}

int handlebody_genus(const Pseudomanifold& p) {
  if (p.dimension() != 3) throw std::invalid_argument("handlebody_genus: dimension must be 3");
  const auto dual = dual_graph(p);
  if (dual.components != 1) throw std::invalid_argument("handlebody_genus: pseudomanifold is not connected");
  return 1 - dual.euler_characteristic;
}

}  // namespace simpvol
