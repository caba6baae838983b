#pragma once

#include "mwgap/dual.hpp"
#include "mwgap/rational.hpp"
#include "mwgap/simplex.hpp"

namespace mwgap {

struct BruteForceResult {
  Rational minimum;
  Cut argmin;
};

/// Largest grid the exhaustive search accepts (C(n+2, 2) <= 15 points).
inline constexpr int kBruteForceMaxN = 4;

/// Exact minimum cost over every cut of the family on Δ_{3,n}: non-opposite
/// cuts (labels in supp(x) ∪ {4}) or 3-way cuts (labels in [3]).
/// Depth-first over points in lexicographic order with partial-cost pruning.
BruteForceResult brute_force_min_cut(int n, const WeightFunction& w, Family family);

}  // namespace mwgap
