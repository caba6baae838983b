#pragma once

// Constructors for the gap weight functions on simplex grids.

#include "mwgap/rational.hpp"
#include "mwgap/simplex.hpp"

#include <array>
#include <string_view>

namespace mwgap {

/// Region membership on Δ_3. A point on a line x_i = 2/3 carries both
/// corner i and the hexagon tag.
struct RegionTag {
  int corner = 0;  // 1..3 when x_corner >= 2/3, else 0
  bool hexagon = false;

  bool operator==(const RegionTag&) const = default;
};

/// Region of a point of Δ_3 given as integer numerators over `denominator`.
RegionTag region_of(const std::array<int, 3>& numerators, int denominator);
RegionTag region_of(const GridPoint& p);

/// The weight the Δ_{3,n} gap puts on a single edge (n divisible by 3).
Rational w3_edge_weight(const Edge& e);

/// Gap on Δ_{3,n}: corner triangles, middle hexagon, ramped border edges.
WeightFunction build_w3(int n);

/// Freund-Karloff weights on Δ_{3,2}.
WeightFunction build_fk();

/// Average of build_w3 embedded into every 3-element face of Δ_{k,n}.
WeightFunction build_w_hat(int k, int n);

/// Uniform 1/C(k,2) on edges lying on a line between two simplex vertices.
WeightFunction build_w_prime(int k, int n);

/// ((k-2)/(k-1))·ŵ + (1/(k-1))·w′.
WeightFunction build_w_tilde(int k, int n);

/// Dispatch by CLI name: w3, fk, what, wprime, wtilde.
WeightFunction build_named(std::string_view name, int k, int n);

/// Restriction of a Δ_k point to the coordinates (a, b, c) (0-based).
GridPoint project_to_face(const GridPoint& p, const std::array<int, 3>& face);
/// Embedding of a Δ_3 point into Δ_k placing its coordinates at (a, b, c).
GridPoint embed_from_face(const GridPoint& p, int k, const std::array<int, 3>& face);

}  // namespace mwgap
