#pragma once

#include "mwgap/simplex.hpp"

#include <optional>
#include <string>

namespace mwgap {

struct SvgOptions {
  std::optional<Cut> cut;         // cut edges drawn in red
  std::optional<int> potential;   // label each face with Φ_i
  double size = 600.0;            // width of the drawing area in px
};

/// Weight diagram of a Δ_{3,n} instance: stroke width grows with the edge
/// weight, zero-weight edges are dashed. Output is byte-deterministic.
std::string emit_svg(const WeightFunction& w, const SvgOptions& options = {});

}  // namespace mwgap
