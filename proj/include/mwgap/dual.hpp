#pragma once

// Planar dual of the augmented Δ_{3,n} grid and the lower-bound certificates
// built on it: exact shortest paths between outer faces and triangles, the
// per-face potential functions, and their consistency checks.

#include "mwgap/rational.hpp"
#include "mwgap/simplex.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mwgap {

using Point3 = std::array<Rational, 3>;

/// A unit triangle of Δ_{3,n}. Up faces have vertices base + e_j, down faces
/// base + 1 - e_j (j = 0, 1, 2).
struct Face {
  bool up = true;
  std::array<int, 3> base{};
  std::array<int, 3> centroid{};  // numerators over 3n
  std::array<std::size_t, 3> vertices{};  // grid ranks
};

struct DualEdge {
  int a = 0;  // dual node ids, a < b
  int b = 0;
  std::size_t primal = 0;  // SimplexGrid edge id of the shared edge
  Rational weight;
};

/// Nodes 0..n²-1 are faces (up faces first, each group in lexicographic base
/// order); nodes n², n²+1, n²+2 are O_1, O_2, O_3.
class DualGraph {
 public:
  DualGraph(int n, const WeightFunction& w);

  int n() const { return n_; }
  const SimplexGrid& grid() const { return grid_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<DualEdge>& edges() const { return edges_; }
  const std::vector<int>& incident(int node) const { return adjacency_[static_cast<std::size_t>(node)]; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  int node_count() const { return face_count() + 3; }
  int outer(int i) const { return face_count() + i - 1; }
  bool is_outer(int node) const { return node >= face_count(); }
  int other_end(int edge, int node) const {
    const auto& e = edges_[static_cast<std::size_t>(edge)];
    return e.a == node ? e.b : e.a;
  }
  /// Dual edge crossing the given primal edge.
  int dual_of_primal(std::size_t primal) const { return primal_to_dual_[primal]; }

 private:
  int n_;
  SimplexGrid grid_;
  std::vector<Face> faces_;
  std::vector<DualEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> primal_to_dual_;
};

DualGraph build_dual(int n, const WeightFunction& w);

template <class W>
struct ShortestPathTree {
  int source = 0;
  std::vector<W> dist;
  std::vector<int> pred_edge;  // -1 at the source and at unreached nodes
  std::vector<bool> reached;
};

/// Paths never pass through an outer node other than the source: a path of
/// a ball or corner cut meets the other outer nodes only at its end.

/// Dijkstra over the exact dual edge weights.
ShortestPathTree<Rational> shortest_paths(const DualGraph& g, int source);
/// Dijkstra over externally supplied per-dual-edge weights (floating point).
ShortestPathTree<double> shortest_paths(const DualGraph& g, std::span<const double> weights, int source);

/// Dual edge ids of the tree path from the source to `target`.
template <class W>
std::vector<int> tree_path(const DualGraph& g, const ShortestPathTree<W>& tree, int target) {
  std::vector<int> path;
  int node = target;
  while (node != tree.source) {
    const int e = tree.pred_edge[static_cast<std::size_t>(node)];
    if (e < 0) return {};
    path.push_back(e);
    node = g.other_end(e, node);
  }
  return {path.rbegin(), path.rend()};
}

Rational dual_distance(const DualGraph& g, int s, int t);

/// Φ_i at a point of Δ_3 (coordinates as exact rationals), i in [1, 3].
Rational potential(int i, const Point3& x, int n);
/// Φ_i at a dual node; outer nodes other than O_i have no potential.
Rational potential(int i, const DualGraph& g, int node);
Point3 centroid_point(const DualGraph& g, int face);

enum class Family { nonopposite, threeway };

struct Certificate {
  Family family = Family::nonopposite;
  Rational target;
  std::array<Rational, 3> pairwise;  // d(O1,O2), d(O1,O3), d(O2,O3), avoiding the third
  Rational ball;
  int witness_face = -1;
  std::array<std::array<int, 3>, 3> witness_vertices{};  // numerators of the witness face's corners
  Rational corner;
  Rational two_corner;
  Rational overall;
  bool pass = false;
  std::array<std::vector<int>, 3> witness_paths;  // dual edges from the witness face to O_1, O_2, O_3
};

/// Exact lower bound on the minimum cost of the family's cuts.
Certificate certify(int n, const WeightFunction& w, Family family, const Rational& target);

struct PotentialReport {
  bool ok = true;
  std::string check;  // "lipschitz", "case1", "case2"
  int index = 0;      // potential index i
  int node_a = -1;
  int node_b = -1;
  Rational lhs;  // violated inequality: lhs <= rhs expected (lipschitz) or lhs >= rhs
  Rational rhs;
  std::string message;
  std::size_t checked = 0;
};

/// Lipschitz property of Φ_i along dual edges, the case-1 outer margin and the
/// case-2 per-face sums. Stops at the first violation.
PotentialReport check_potentials(int n, const WeightFunction& w);

std::string family_name(Family f);
Family parse_family(std::string_view name);

}  // namespace mwgap
