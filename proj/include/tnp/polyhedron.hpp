#pragma once

#include "tnp/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tnp {

/// The closed half-space <normal, x> <= offset.
struct HalfSpace {
  Vec normal;
  Rat offset;

  bool contains(const Vec& x) const { return dot(normal, x) <= offset; }
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// The hyperplane <normal, x> = offset.
struct Hyperplane {
  Vec normal;
  Rat offset;

  bool contains(const Vec& x) const { return dot(normal, x) == offset; }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Exact rational convex polyhedron carrying both descriptions.
///
/// Every constructor runs the double description method in both directions, so
/// the stored half-spaces are exactly the facets and the stored generators are
/// irredundant. Both representations are kept in a canonical form:
///   - equalities are the reduced row echelon basis of the affine hull, each row
///     scaled to coprime integers;
///   - inequalities are reduced modulo the equalities and scaled to coprime
///     integers (positive factor only, the direction carries meaning);
///   - vertices and rays are projected onto the orthogonal complement of the
///     lineality space, rays are primitive integer vectors;
///   - every list is sorted lexicographically.
/// Two polyhedra describe the same set iff they compare equal.
///
/// When the lineality space is nontrivial the "vertices" are the points of the
/// minimal faces closest to the origin, one per minimal face.
class Polyhedron {
 public:
  /// The empty subset of R^0.
  Polyhedron() = default;
  static Polyhedron from_hrep(std::size_t ambient, std::vector<HalfSpace> inequalities,
                              std::vector<Hyperplane> equalities = {});
  static Polyhedron from_vrep(std::size_t ambient, std::vector<Vec> vertices, std::vector<Vec> rays = {},
                              std::vector<Vec> lineality = {});
  static Polyhedron whole_space(std::size_t ambient);
  static Polyhedron empty(std::size_t ambient);
  static Polyhedron point(Vec p);

  std::size_t ambient_dim() const { return ambient_; }
  /// Affine dimension; -1 for the empty set.
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool is_bounded() const { return rays_.empty() && lineality_.empty(); }

  const std::vector<HalfSpace>& inequalities() const { return inequalities_; }
  const std::vector<Hyperplane>& equalities() const { return equalities_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& lineality() const { return lineality_; }

  bool contains(const Vec& x) const;
  bool in_relative_interior(const Vec& x) const;

  /// Compact single-line description, used in diagnostics.
  std::string describe() const;

  friend bool operator==(const Polyhedron& a, const Polyhedron& b);
  friend std::strong_ordering operator<=>(const Polyhedron& a, const Polyhedron& b);

 private:
  static Polyhedron from_generators(std::size_t ambient, std::vector<Vec> vertices, std::vector<Vec> rays,
                                    std::vector<Vec> lineality);
  void canonicalize_h();
  void canonicalize_v();

  std::size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<HalfSpace> inequalities_;
  std::vector<Hyperplane> equalities_;
  std::vector<Vec> vertices_;
  std::vector<Vec> rays_;
  std::vector<Vec> lineality_;
};

/// Polyhedral cone with apex at the origin.
class Cone {
 public:
  static Cone from_generators(std::size_t ambient, std::vector<Vec> rays, std::vector<Vec> lineality = {});
  static Cone zero(std::size_t ambient);

  std::size_t ambient_dim() const { return body_.ambient_dim(); }
  int dim() const { return body_.dim(); }
  const std::vector<Vec>& rays() const { return body_.rays(); }
  const std::vector<Vec>& lineality() const { return body_.lineality(); }
  bool contains(const Vec& v) const { return body_.contains(v); }
  bool is_zero() const { return body_.dim() == 0; }
  const Polyhedron& polyhedron() const { return body_; }

  friend bool operator==(const Cone&, const Cone&) = default;
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b) { return a.body_ <=> b.body_; }

 private:
  explicit Cone(Polyhedron body) : body_(std::move(body)) {}
  friend Cone recession_cone(const Polyhedron& p);
  Polyhedron body_;
};

Polyhedron convex_hull(const std::vector<Vec>& points);

/// Re-derives both descriptions from the inequality description.
Polyhedron dual_description(const Polyhedron& p);

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);
Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);

/// sup of <alpha, x> over p; nullopt when unbounded above. Requires p nonempty.
std::optional<Rat> support_value(const Polyhedron& p, const Vec& alpha);

/// Face of p maximizing <alpha, .>; nullopt when the functional is unbounded above.
std::optional<Polyhedron> face_in_direction(const Polyhedron& p, const Vec& alpha);

/// Cone of directions v with p + v contained in p. Throws on empty input.
Cone recession_cone(const Polyhedron& p);

/// True iff the cone is not contained in the nonpositive orthant.
bool is_dicritical_cone(const Cone& c);

/// A generator of `c` with a strictly positive coordinate (primitive), if any.
std::optional<Vec> dicritical_direction(const Cone& c);

bool contains(const Polyhedron& p, const Vec& x);
int affine_dim(const Polyhedron& p);
bool is_subset(const Polyhedron& p, const Polyhedron& q);
bool equal_as_sets(const Polyhedron& p, const Polyhedron& q);

/// Barycenter of the vertices plus the sum of the rays. Throws on empty input.
Vec relative_interior_point(const Polyhedron& p);

/// Image of p under x -> M x + b, where M has one row per output coordinate.
Polyhedron affine_image(const Polyhedron& p, const std::vector<Vec>& matrix, const Vec& offset);

/// Linear subspace directions of the affine hull of p.
std::vector<Vec> affine_hull_directions(const Polyhedron& p);

struct PolyhedronFace {
  Polyhedron face;
  /// Indices into the inequalities of the parent that hold with equality.
  std::vector<std::size_t> tight;
};

/// All nonempty faces, the polyhedron itself included; sorted by decreasing dimension.
std::vector<PolyhedronFace> enumerate_faces(const Polyhedron& p);

/// Normal cone of the face cut out by `tight` (outer normals).
Cone normal_cone(const Polyhedron& p, const std::vector<std::size_t>& tight);

/// Smallest face of p containing x (x must lie in p).
PolyhedronFace minimal_face(const Polyhedron& p, const Vec& x);

/// A point of `piece` outside the union of `cover`, if any. The point is the
/// relative-interior point of a part of `piece` cut out by the cover's hyperplanes.
std::optional<Vec> uncovered_point(const std::vector<Polyhedron>& cover, const Polyhedron& piece);

/// True iff every point of `piece` lies in the union of `cover`.
bool union_contains(const std::vector<Polyhedron>& cover, const Polyhedron& piece);
bool unions_equal(const std::vector<Polyhedron>& a, const std::vector<Polyhedron>& b);

}  // namespace tnp
