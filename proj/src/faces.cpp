#include "tnp/faces.hpp"

#include <algorithm>

namespace tnp {

PolytopeTuple delta0(const std::vector<std::vector<LatticePoint>>& supports) {
  if (supports.empty()) throw Error("delta0 of an empty tuple");
  const std::size_t n = supports.front().empty() ? 0 : supports.front().front().size();
  PolytopeTuple out;
  out.sum = Polyhedron::point(zero_vec(n));
  for (const auto& s : supports) {
    std::vector<Vec> pts{zero_vec(n)};
    for (const auto& a : s) {
      if (a.size() != n) throw DimensionMismatch("support points of different lengths");
      pts.push_back(to_vec(a));
    }
    out.polytopes.push_back(convex_hull(pts));
    out.sum = minkowski_sum(out.sum, out.polytopes.back());
  }
  return out;
}

PolytopeTuple delta0(const TropicalMap& f) {
  std::vector<std::vector<LatticePoint>> supports;
  for (const auto& c : f.components()) supports.push_back(c.support());
  return delta0(supports);
}

std::vector<TupleFace> enumerate_tuple_faces(const PolytopeTuple& d) {
  std::vector<TupleFace> out;
  const std::size_t n = d.sum.ambient_dim();
  for (const auto& pf : enumerate_faces(d.sum)) {
    if (pf.tight.empty()) continue;
    TupleFace g;
    g.id = out.size();
    g.sum_face = pf.face;
    g.witness = zero_vec(n);
    for (std::size_t k : pf.tight) g.witness = add(g.witness, d.sum.inequalities()[k].normal);
    g.normal_cone = normal_cone(d.sum, pf.tight);
    for (const auto& p : d.polytopes) g.members.push_back(*face_in_direction(p, g.witness));
    g.flags = classify(g);
    out.push_back(std::move(g));
  }
  return out;
}

FaceFlags classify(const TupleFace& g) {
  FaceFlags f;
  const std::size_t n = g.witness.size();
  const Vec origin = zero_vec(n);
  bool has_origin_vertex_member = false;
  for (std::size_t i = 0; i < g.members.size(); ++i) {
    if (g.members[i].contains(origin)) f.bmcd.push_back(i);
    if (g.members[i].dim() == 0 && g.members[i].contains(origin)) has_origin_vertex_member = true;
  }
  f.origin = f.bmcd.size() == g.members.size();
  f.pre_origin = !f.bmcd.empty();
  f.strictly_pre_origin = f.pre_origin && !f.origin;
  f.dicritical = is_dicritical_cone(g.normal_cone) && !has_origin_vertex_member;
  return f;
}

}  // namespace tnp
