#pragma once

// Normal forms of non-opposite cuts of Δ_{3,n}.

#include "mwgap/simplex.hpp"

#include <stdexcept>
#include <vector>

namespace mwgap {

/// Raised when a normalization step finds no legal relabeling.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Connected components of the grid graph after removing every cut edge.
/// Components are numbered in order of their lexicographically smallest point.
struct UncutComponents {
  std::vector<int> component_of;               // per grid rank
  std::vector<std::vector<std::size_t>> members;  // ranks, ascending
};

UncutComponents uncut_components(const SimplexGrid& grid, std::span<const int> labels);

enum class CutShape { ball, three_corner, other };

/// Ball: three connected classes, one per terminal, nothing labeled 4.
/// Three-corner: additionally one connected 4-class meeting all three sides.
CutShape classify_shape(const Cut& cut);

/// Merges uncut components until the cut is a ball or three-corner cut.
/// Every edge uncut in the input stays uncut, so the cost never rises.
///  (a) a 4-component missing some side takes the smallest legal label in [3];
///  (b) an i-component without e^i takes the smallest legal neighbouring label.
/// Components are scanned by smallest point; the first one with a legal move
/// is relabeled and the scan restarts.
Cut normalize_cut(const Cut& cut);

}  // namespace mwgap

#include "mwgap/random.hpp"

namespace mwgap {

/// Non-terminal points take a uniform label from supp(x) ∪ {4}.
template <class Engine>
Cut random_nonopposite_cut(int n, Engine& rng) {
  return Cut::from_function(3, n, CutFamily::nonopposite, [&](const GridPoint& p) {
    if (p.is_terminal()) return p.support().front();
    auto options = p.support();
    options.push_back(4);
    return options[uniform_below(rng, options.size())];
  });
}

}  // namespace mwgap
