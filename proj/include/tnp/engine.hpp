#pragma once

#include "tnp/faces.hpp"
#include "tnp/subdivision.hpp"
#include "tnp/tropical.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tnp {

/// How the upper-bound coordinates of a contribution are closed up.
enum class Assembly {
  /// Independent box {y_i <= eps_i} per coordinate.
  Product,
  /// Image of the cell under those coordinates, pushed down by the nonpositive orthant.
  Staircase,
};

struct EngineOptions {
  Assembly assembly = Assembly::Product;
  /// Largest ambient dimension accepted.
  std::size_t dim_cap = 4;
};

class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A contribution of full dimension, which only a non-generic map produces.
class GenericityViolation : public Error {
 public:
  using Error::Error;
};

struct GammaContext {
  TupleFace gamma;
  std::vector<Factor> restricted;
  /// Decomposition induced by the restricted polynomials.
  CellComplex sigma;
  /// Indices whose member face misses the origin.
  std::vector<std::size_t> tbmcd;
};

GammaContext analyze_gamma(const TropicalMap& f, const TupleFace& gamma);

struct SigmaAnalysis {
  std::size_t cell = 0;
  bool contributing = false;
  /// Indices whose dual summand has positive dimension.
  std::vector<std::size_t> iup;
  /// Origin indices with a point summand; these coordinates are pinned to the image.
  std::vector<std::size_t> image_block;
  /// Origin indices with a positive-dimensional summand; these coordinates are bounded above.
  std::vector<std::size_t> bound_block;
  /// Supremum of the restricted polynomial over the closed cell; nullopt for +inf.
  std::map<std::size_t, std::optional<Rat>> eps;
  /// Closure of the image of the cell under the image-block polynomials, in R^|image_block|.
  Polyhedron y_image;
};

SigmaAnalysis analyze_sigma(const GammaContext& ctx, const Cell& sigma);

/// Polytope contributed by one cell; empty unless the face is dicritical and
/// pre-origin and the cell contributes. Throws GenericityViolation on a
/// full-dimensional result.
Polyhedron cell_contribution(const GammaContext& ctx, const SigmaAnalysis& a, Assembly assembly = Assembly::Product);

struct Piece {
  Polyhedron polytope;
  std::size_t gamma = 0;
  std::size_t cell = 0;
  Vec witness;
  std::string cell_label;
};

struct TNPSet {
  std::size_t n = 0;
  /// Every nonempty contribution, in face and cell order.
  std::vector<Piece> pieces;
  /// Pieces not contained in another piece, deduplicated and sorted.
  std::vector<Piece> canonical;

  std::vector<Polyhedron> polytopes() const;
};

TNPSet tnp_set(const TropicalMap& f, const EngineOptions& options = {});

/// Drops pieces contained in others and sorts the rest.
std::vector<Piece> canonical_union(std::vector<Piece> pieces);

/// True iff y lies in some closed piece.
bool membership(const TNPSet& s, const Vec& y);

struct GenericityReport {
  bool generic = true;
  std::vector<std::string> violations;
};

/// Transversality of the decomposition induced by every nonempty subfamily of the
/// restricted polynomials, over every proper tuple-face and the unrestricted map.
GenericityReport check_genericity(const TropicalMap& f);

struct BijectionReport {
  std::size_t xi_cells = 0;
  std::size_t sigma_cells = 0;
  /// Cells of the full decomposition dual to the face that sit in exactly one restricted cell.
  std::size_t uniquely_placed = 0;

  bool holds() const { return xi_cells == sigma_cells && uniquely_placed == xi_cells; }
};

/// Compares the cells of `xi` whose dual lies on the face with the cells of the restricted decomposition.
BijectionReport check_bijection(const CellComplex& xi, const GammaContext& ctx);

}  // namespace tnp
