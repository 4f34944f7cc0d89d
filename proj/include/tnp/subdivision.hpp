#pragma once

#include "tnp/polyhedron.hpp"
#include "tnp/tropical.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tnp {

/// A factor of a decomposition. nullopt stands for a restriction that kept no term.
using Factor = std::optional<TropicalPolynomial>;

/// Region of R^n on which one factor has a fixed set of maximizing terms.
struct Region {
  Polyhedron closure;
  std::vector<LatticePoint> argmax;
  bool level_attained = false;
};

/// Regions of max(f, level), one per upper face of the lifted Newton polytope.
/// An absent factor with level -inf yields the single region R^n with empty argmax.
std::vector<Region> factor_regions(std::size_t n, const Factor& f, const ExtRat& level);

struct Cell {
  std::size_t id = 0;
  Polyhedron closure;
  int dim = 0;
  /// Minkowski sum of the summands.
  Polyhedron dual;
  std::vector<Polyhedron> summands;
  std::vector<std::vector<LatticePoint>> argmax;
  std::vector<bool> level_attained;

  /// Stable text label built from the per-factor maximizer sets.
  std::string label() const;
};

struct CellComplex {
  std::size_t n = 0;
  std::vector<ExtRat> levels;
  /// Per factor: conv of the support, with the origin adjoined when the level is finite.
  std::vector<Polyhedron> newton;
  std::vector<Cell> cells;

  /// Cell whose relative interior contains x.
  const Cell& locate(const Vec& x) const;
};

/// Common refinement of the regions of every factor.
CellComplex decomposition(std::size_t n, const std::vector<Factor>& factors, const std::vector<ExtRat>& levels);
CellComplex decomposition(const std::vector<TropicalPolynomial>& polys, const std::vector<ExtRat>& levels);
/// All levels -inf.
CellComplex decomposition(const TropicalMap& f);

/// Refines `cells` by `regions`, keeping a part only when `keep` accepts it (may be null).
/// Returned parts carry the combined argmax data but no dual.
struct PartialCell {
  Polyhedron closure;
  std::vector<std::vector<LatticePoint>> argmax;
  std::vector<bool> level_attained;
};
std::vector<PartialCell> refine(const std::vector<PartialCell>& cells, const std::vector<Region>& regions);

struct TransversalityReport {
  bool transversal = true;
  std::vector<std::size_t> offending;
};

/// Checks dim(dual) = sum of summand dimensions on every cell.
TransversalityReport is_transversal(const CellComplex& c);

struct DualityViolation {
  std::size_t cell;
  std::string what;
};

/// Cell-by-cell check of the cell/dual duality: sum decomposition, complementary
/// dimensions, orthogonal affine spans, and unboundedness matching the faces of
/// the Minkowski sum of the Newton polytopes.
std::vector<DualityViolation> check_duality(const CellComplex& c);

struct RegularCell {
  /// Projection of an upper face of the lifted hull.
  Polyhedron cell;
  /// Support points whose lifts lie on that face.
  std::vector<LatticePoint> points;
  /// Vertices of the lifted face, projected.
  std::vector<LatticePoint> vertices;
};

/// Regular subdivision induced by `lift` (upper hull convention). All cells, largest first.
std::vector<RegularCell> regular_subdivision(const std::vector<LatticePoint>& support,
                                             const std::map<LatticePoint, Rat>& lift);

}  // namespace tnp
