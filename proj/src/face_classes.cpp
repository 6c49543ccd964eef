#include "simpvol/face_classes.hpp"

#include <algorithm>
#include <deque>

#include "simpvol/homology.hpp"

namespace simpvol {

FaceClassTable::FaceClassTable(const Pseudomanifold& p) : dimension_(p.dimension()) {
  const GluingTable table(p);
  const int n = dimension_;
  const std::size_t per_simplex = std::size_t{1} << (n + 1);
  const std::size_t slots = per_simplex * static_cast<std::size_t>(p.simplex_count());

  classes_.assign(static_cast<std::size_t>(n + 1), {});
  rigid_.assign(static_cast<std::size_t>(n + 1), {});
  class_of_.assign(slots, -1);
  orientation_.assign(slots, 0);

  // to_root[slot][k]: position, in the representative, of the k-th (ascending)
  // vertex of this face under the composed identifications.
  std::vector<std::vector<int>> to_root(slots);

  for (std::size_t start = 0; start < slots; ++start) {
    const VertexSet start_set = static_cast<VertexSet>(start % per_simplex);
    if (start_set == 0 || class_of_[start] >= 0) continue;
    const int d = popcount(start_set) - 1;
    const int cls = static_cast<int>(classes_[d].size());
    std::vector<Face> members_of_class;
    bool rigid = true;

    class_of_[start] = cls;
    to_root[start] = identity_permutation(d + 1);
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      const Face face{static_cast<int>(cur / per_simplex), static_cast<VertexSet>(cur % per_simplex)};
      members_of_class.push_back(face);
      const auto verts = simpvol::members(face.vertices);

      for (int j = 0; j <= n; ++j) {
        if (face.vertices & bit(j)) continue;
        const auto& nb = table.neighbour({face.simplex, j});
        if (!nb) continue;
        const VertexSet image = simpvol::apply(nb->map, face.vertices);
        const auto image_verts = simpvol::members(image);
        // position_map[q] = position of the image of verts[q] in image_verts.
        std::vector<int> position_map(verts.size());
        for (std::size_t q = 0; q < verts.size(); ++q) {
          const int target = nb->map[verts[q]];
          position_map[q] = static_cast<int>(
              std::find(image_verts.begin(), image_verts.end(), target) - image_verts.begin());
        }
        std::vector<int> candidate(verts.size());
        for (std::size_t q = 0; q < verts.size(); ++q) candidate[position_map[q]] = to_root[cur][q];

        const std::size_t next = static_cast<std::size_t>(nb->face.simplex) * per_simplex + image;
        if (class_of_[next] < 0) {
          class_of_[next] = cls;
          to_root[next] = std::move(candidate);
          queue.push_back(next);
        } else if (to_root[next] != candidate) {
          rigid = false;
        }
      }
    }
    std::sort(members_of_class.begin(), members_of_class.end());
    classes_[d].push_back(std::move(members_of_class));
    rigid_[d].push_back(rigid);
  }

  for (std::size_t s = 0; s < slots; ++s)
    if (!to_root[s].empty()) orientation_[s] = sign(to_root[s]);
}

std::size_t FaceClassTable::slot(const Face& f) const {
  return static_cast<std::size_t>(f.simplex) * (std::size_t{1} << (dimension_ + 1)) + f.vertices;
}

int FaceClassTable::class_of(const Face& f) const { return class_of_.at(slot(f)); }

int FaceClassTable::orientation(const Face& f) const { return orientation_.at(slot(f)); }

std::vector<int> FaceClassTable::f_vector() const {
  std::vector<int> f;
  for (const auto& c : classes_) f.push_back(static_cast<int>(c.size()));
  return f;
}

bool FaceClassTable::all_rigid() const {
  for (const auto& per_dim : rigid_)
    for (bool r : per_dim)
      if (!r) return false;
  return true;
}

int FaceClassTable::euler_characteristic() const {
  int chi = 0;
  for (int d = 0; d <= dimension_; ++d) chi += (d % 2 == 0 ? 1 : -1) * count(d);
  return chi;
}

int euler_characteristic(const Pseudomanifold& p) {
  const FaceClassTable table(p);
  // A face folded onto itself gains a new vertex at its fixed point, so the
  // class count undercounts cells; the subdivision has none of those.
  if (!table.all_rigid()) return FaceClassTable(barycentric_subdivision(p)).euler_characteristic();
  return table.euler_characteristic();
}

}  // namespace simpvol
