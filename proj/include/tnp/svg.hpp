#pragma once

#include "tnp/engine.hpp"
#include "tnp/oracle.hpp"

#include <optional>
#include <string>

namespace tnp {

/// Raised when plotting a map whose ambient dimension is not 2.
class PlotDimensionError : public Error {
 public:
  using Error::Error;
};

/// Deterministic SVG of the cell decomposition (gray), the non-properness set
/// (highlighted) and, when `level` is given, the virtual preimage of that point (dashed).
std::string plot_svg(const TropicalMap& f, const TNPSet& s, const Box& window, const std::optional<Vec>& level = {});

}  // namespace tnp
