#pragma once

#include "tnp/engine.hpp"
#include "tnp/polyhedron.hpp"

#include <string>
#include <vector>

namespace tnp {

struct RecoveredFan {
  std::size_t n = 0;
  /// cones[d] lists the cones of dimension d, sorted.
  std::vector<std::vector<Cone>> cones;
  /// Entry j counts the cones of dimension n - j (the j-dimensional faces of the dual polytope).
  std::vector<std::size_t> face_vector;
  /// Primitive generators, modulo the lineality space, of the cones one dimension above it.
  std::vector<Vec> facet_normals;
  /// Basis of the lineality space shared by every cone; nonempty when the dual polytope is not full-dimensional.
  std::vector<Vec> lineality;
  bool complete = true;
  std::string diagnostic;

  /// Full-dimensional cones.
  const std::vector<Cone>& maximal() const { return cones.back(); }
};

/// Normal fan read off the recession cones of a codimension-one polyhedral set.
/// Throws on an empty set or on pieces of the wrong dimension.
RecoveredFan recover_fan(const std::vector<Polyhedron>& pieces);
RecoveredFan recover_fan(const TNPSet& s);

/// Outer normal fan of a polytope, computed directly from its faces.
RecoveredFan normal_fan(const Polyhedron& polytope);

}  // namespace tnp
