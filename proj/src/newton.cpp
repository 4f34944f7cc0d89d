#include "tnp/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tnp {

namespace {

// Fills cones by dimension, face vector, normals and lineality from the maximal cones.
RecoveredFan assemble(std::size_t n, const std::vector<Polyhedron>& maximal) {
  RecoveredFan fan;
  fan.n = n;
  fan.cones.assign(n + 1, {});
  std::set<Polyhedron> seen;
  for (const auto& m : maximal) {
    for (const auto& f : enumerate_faces(m)) {
      if (!seen.insert(f.face).second) continue;
      fan.cones[static_cast<std::size_t>(f.face.dim())].push_back(
          Cone::from_generators(n, f.face.rays(), f.face.lineality()));
    }
  }
  for (auto& list : fan.cones) std::sort(list.begin(), list.end());
  for (std::size_t j = 0; j < n; ++j) fan.face_vector.push_back(fan.cones[n - j].size());
  std::size_t lin_dim = n;
  for (std::size_t d = 0; d <= n; ++d) {
    if (!fan.cones[d].empty()) {
      lin_dim = d;
      break;
    }
  }
  if (lin_dim <= n) fan.lineality = fan.cones[lin_dim].front().lineality();
  if (lin_dim + 1 <= n) {
    std::set<Vec, VecLess> normals;
    for (const auto& c : fan.cones[lin_dim + 1]) {
      for (const auto& r : c.rays()) normals.insert(primitive(r));
    }
    fan.facet_normals.assign(normals.begin(), normals.end());
  }
  return fan;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

RecoveredFan recover_fan(const std::vector<Polyhedron>& pieces) {
  if (pieces.empty()) throw Error("cannot recover a fan from an empty set");
  const std::size_t n = pieces.front().ambient_dim();
  std::vector<Polyhedron> walls;
  for (const auto& p : pieces) {
    if (p.ambient_dim() != n) throw DimensionMismatch("pieces in different ambient dimensions");
    if (p.dim() >= static_cast<int>(n)) throw Error("piece of full dimension: not a codimension-one set");
    Cone c = recession_cone(p);
    if (c.dim() == static_cast<int>(n) - 1) walls.push_back(c.polyhedron());
  }
  if (walls.empty()) throw Error("no codimension-one recession cone: the set is bounded in every wall direction");

  std::set<Vec, VecLess> normals;
  for (const auto& w : walls) normals.insert(primitive_line(w.equalities().front().normal));

  std::vector<Polyhedron> chambers{Polyhedron::whole_space(n)};
  for (const auto& a : normals) {
    std::vector<Polyhedron> next;
    for (const auto& c : chambers) {
      for (int sign : {1, -1}) {
        Polyhedron half = intersect(c, Polyhedron::from_hrep(n, {HalfSpace{scale(a, Rat(sign)), Rat(0)}}));
        if (half.dim() == static_cast<int>(n)) next.push_back(std::move(half));
      }
    }
    chambers = std::move(next);
  }

  DisjointSets groups(chambers.size());
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    for (std::size_t j = i + 1; j < chambers.size(); ++j) {
      Polyhedron wall = intersect(chambers[i], chambers[j]);
      if (wall.dim() != static_cast<int>(n) - 1) continue;
      const Vec x = relative_interior_point(wall);
      const bool covered = std::any_of(walls.begin(), walls.end(), [&](const Polyhedron& w) { return w.contains(x); });
      if (!covered) groups.unite(i, j);
    }
  }

  std::vector<std::vector<std::size_t>> members(chambers.size());
  for (std::size_t i = 0; i < chambers.size(); ++i) members[groups.find(i)].push_back(i);
  std::vector<Polyhedron> maximal;
  bool convex = true;
  for (const auto& group : members) {
    if (group.empty()) continue;
    std::vector<Vec> rays, lin;
    std::vector<Polyhedron> parts;
    for (std::size_t i : group) {
      rays.insert(rays.end(), chambers[i].rays().begin(), chambers[i].rays().end());
      lin.insert(lin.end(), chambers[i].lineality().begin(), chambers[i].lineality().end());
      parts.push_back(chambers[i]);
    }
    Polyhedron hull = Polyhedron::from_vrep(n, {zero_vec(n)}, std::move(rays), std::move(lin));
    if (!union_contains(parts, hull)) convex = false;
    maximal.push_back(std::move(hull));
  }
  RecoveredFan fan = assemble(n, maximal);
  if (!convex) {
    fan.complete = false;
    fan.diagnostic = "a complementary region at infinity is not convex";
  }
  for (std::size_t i = 0; i < maximal.size() && fan.complete; ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      if (intersect(maximal[i], maximal[j]).dim() == static_cast<int>(n)) {
        fan.complete = false;
        fan.diagnostic = "maximal cones overlap";
        break;
      }
    }
  }
  return fan;
}

RecoveredFan recover_fan(const TNPSet& s) { return recover_fan(s.polytopes()); }

RecoveredFan normal_fan(const Polyhedron& polytope) {
  if (polytope.is_empty()) throw Error("normal fan of an empty polytope");
  if (!polytope.is_bounded()) throw Error("normal fan requires a bounded polytope");
  std::vector<Polyhedron> maximal;
  for (const auto& f : enumerate_faces(polytope)) {
    if (f.face.dim() != 0) continue;
    maximal.push_back(normal_cone(polytope, f.tight).polyhedron());
  }
  return assemble(polytope.ambient_dim(), maximal);
}

}  // namespace tnp
