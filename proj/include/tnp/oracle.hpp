#pragma once

#include "tnp/engine.hpp"
#include "tnp/tropical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tnp {

struct OracleVerdict {
  bool member = false;
  /// Label of the witnessing cell of the virtual-preimage decomposition.
  std::optional<std::string> cell;
  /// Primitive dicritical direction of that cell.
  std::optional<Vec> ray;
};

/// Decides membership straight from the definition: some cell of the virtual
/// preimage of y (all factors at a corner, the level included) recedes along a
/// direction with a positive coordinate.
OracleVerdict in_tnp(const TropicalMap& f, const Vec& y);

/// Axis-aligned rational box.
struct Box {
  Vec lo;
  Vec hi;
};

/// Bounding box of the vertices of the pieces, inflated by `margin` per side.
/// Falls back to [-margin, margin]^n when there are no vertices.
Box default_box(const TNPSet& s, const Rat& margin = Rat(5));

struct GridMismatch {
  std::vector<std::size_t> index;
  Vec point;
  bool oracle = false;
  bool engine = false;
  std::optional<Vec> witness_ray;
  std::optional<std::string> witness_cell;
  /// Provenance of the engine pieces containing the point.
  std::vector<std::string> pieces;
};

struct GridReport {
  std::size_t points = 0;
  std::size_t members = 0;
  std::vector<GridMismatch> mismatches;
};

/// Offset added to every grid coordinate along axis i: 1/p_i for distinct primes
/// p_i >= 1009 dividing no denominator of the input.
Vec generic_offsets(const TropicalMap& f, const Box& box);

/// Compares the oracle with engine membership on res^n points of the box.
GridReport grid_compare(const TropicalMap& f, const TNPSet& engine, const Box& box, std::size_t res);

/// Points lying exactly on the pieces: vertices, relative-interior points,
/// vertex midpoints and points pushed along rays. Deterministic, at most `count`.
std::vector<Vec> boundary_samples(const TNPSet& s, std::size_t count);

struct BoundaryReport {
  std::size_t points = 0;
  std::vector<Vec> disagreements;
};

BoundaryReport boundary_compare(const TropicalMap& f, const TNPSet& engine, std::size_t count);

/// Outcome of comparing the two assemblies on one cell.
struct AssemblyDisagreement {
  std::size_t gamma = 0;
  std::string cell;
  Polyhedron product;
  Polyhedron staircase;
  /// "absorbed" when the union is unchanged, else "product" or "staircase"
  /// naming the assembly the oracle sides with at `probe`.
  std::string verdict;
  std::optional<Vec> probe;
};

struct AssemblyProbe {
  std::size_t compared = 0;
  std::vector<AssemblyDisagreement> disagreements;
  bool unions_equal = true;
};

/// Runs both assemblies over every contributing cell and classifies each difference with the oracle.
AssemblyProbe probe_assemblies(const TropicalMap& f);

}  // namespace tnp
