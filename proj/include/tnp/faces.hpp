#pragma once

#include "tnp/polyhedron.hpp"
#include "tnp/tropical.hpp"

#include <vector>

namespace tnp {

/// Newton polytopes with the origin adjoined, and their Minkowski sum.
struct PolytopeTuple {
  std::vector<Polyhedron> polytopes;
  Polyhedron sum;
};

PolytopeTuple delta0(const std::vector<std::vector<LatticePoint>>& supports);
PolytopeTuple delta0(const TropicalMap& f);

struct FaceFlags {
  bool dicritical = false;
  bool origin = false;
  bool pre_origin = false;
  bool strictly_pre_origin = false;
  /// Indices i whose member face contains the origin.
  std::vector<std::size_t> bmcd;

  friend bool operator==(const FaceFlags&, const FaceFlags&) = default;
};

struct TupleFace {
  std::size_t id = 0;
  std::vector<Polyhedron> members;
  /// Minkowski sum of the members, a proper face of the sum polytope.
  Polyhedron sum_face;
  /// Outer normal in the relative interior of the normal cone.
  Vec witness;
  Cone normal_cone = Cone::zero(0);
  FaceFlags flags;
};

/// One tuple-face per proper face of the sum, classified. Order follows the face
/// lattice enumeration of the sum (larger faces first).
std::vector<TupleFace> enumerate_tuple_faces(const PolytopeTuple& d);

FaceFlags classify(const TupleFace& g);

}  // namespace tnp
