#pragma once

// Grid simplex Δ_{k,n}: points, unit-transfer edges, weight functions, cuts,
// and the two exact functionals lpc(w) and cost(P, w).
//
// Conventions used throughout the library:
//   * coordinates are 0-based (GridPoint::operator[]);
//   * terminal / cluster labels are 1-based, label k+1 is the extra cluster
//     of a non-opposite cut.

#include "mwgap/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mwgap {

/// A point of Δ_{k,n} stored as k nonnegative integer numerators summing to n.
class GridPoint {
 public:
  GridPoint() = default;
  explicit GridPoint(std::vector<int> coords);

  /// n·e^i, with i in [1, k].
  static GridPoint terminal(int k, int n, int i);

  int k() const { return static_cast<int>(coords_.size()); }
  int n() const;
  int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const int> coords() const { return coords_; }

  /// 1-based indices of the nonzero coordinates, ascending.
  std::vector<int> support() const;
  int support_size() const;
  bool supports(int label) const { return label >= 1 && label <= k() && coords_[label - 1] > 0; }
  bool is_terminal() const { return support_size() == 1; }

  auto operator<=>(const GridPoint&) const = default;

 private:
  std::vector<int> coords_;
};

/// Unordered pair of grid points at L1 distance 2/n, stored with u < v.
class Edge {
 public:
  Edge(GridPoint a, GridPoint b);

  const GridPoint& u() const { return u_; }
  const GridPoint& v() const { return v_; }
  int k() const { return u_.k(); }
  int n() const { return u_.n(); }

  /// The two coordinates (0-based, ascending) in which the endpoints differ.
  std::pair<int, int> moved() const;
  int union_support_size() const;

  auto operator<=>(const Edge&) const = default;

 private:
  GridPoint u_;
  GridPoint v_;
};

/// Number of compositions of `total` into `parts` nonnegative parts.
std::uint64_t composition_count(int parts, int total);

/// Position of `p` in the lexicographic enumeration of Δ_{k,n}.
std::size_t lex_rank(const GridPoint& p);

std::vector<GridPoint> enumerate_points(int k, int n);
std::vector<Edge> enumerate_edges(int k, int n);

/// Materialized Δ_{k,n} with O(1) edge lookup. Only meant for grids small
/// enough to enumerate.
class SimplexGrid {
 public:
  SimplexGrid(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<GridPoint>& points() const { return points_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return points_.size(); }

  std::size_t rank(const GridPoint& p) const;
  std::size_t terminal_rank(int i) const { return rank(GridPoint::terminal(k_, n_, i)); }
  /// Endpoint ranks of edge e (u first).
  std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const { return endpoint_ranks_[e]; }
  /// Index of the edge joining two ranks, or -1.
  std::ptrdiff_t edge_index(std::size_t a, std::size_t b) const;
  std::ptrdiff_t edge_index(const Edge& e) const { return edge_index(rank(e.u()), rank(e.v())); }
  /// Edge ids incident to the point with the given rank.
  const std::vector<std::size_t>& incident(std::size_t r) const { return incident_[r]; }

 private:
  int k_;
  int n_;
  std::vector<GridPoint> points_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoint_ranks_;
  std::vector<std::vector<std::size_t>> incident_;
  std::unordered_map<std::uint64_t, std::size_t> edge_lookup_;
};

/// Sparse exact weights on E_{k,n}. Absent edges weigh zero; zero entries
/// are never stored, so two functions are equal iff their maps are equal.
class WeightFunction {
 public:
  WeightFunction(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }

  Rational at(const Edge& e) const;
  void set(const Edge& e, const Rational& w);
  void add(const Edge& e, const Rational& w);

  const std::map<Edge, Rational>& entries() const { return weights_; }
  std::size_t support_size() const { return weights_.size(); }
  Rational total() const;

  WeightFunction scaled(const Rational& factor) const;

  bool operator==(const WeightFunction&) const = default;

 private:
  void check_edge(const Edge& e) const;

  int k_;
  int n_;
  std::map<Edge, Rational> weights_;
};

/// a·w1 + b·w2 for nonnegative a, b on the same grid.
WeightFunction linear_combination(const Rational& a, const WeightFunction& w1, const Rational& b,
                                  const WeightFunction& w2);

enum class CutFamily {
  kway,         // labels in [k]
  nonopposite,  // labels in supp(x) ∪ {k+1}
  extended,     // labels in [k+1], no support constraint (raw face restrictions)
};

/// A labeling of every point of Δ_{k,n}, indexed by lexicographic rank.
/// Terminal i is always labeled i.
class Cut {
 public:
  Cut(int k, int n, CutFamily family, std::vector<int> labels);

  static Cut from_function(int k, int n, CutFamily family,
                           const std::function<int(const GridPoint&)>& label_of);

  int k() const { return k_; }
  int n() const { return n_; }
  CutFamily family() const { return family_; }
  int label(const GridPoint& p) const { return labels_[lex_rank(p)]; }
  int label_at(std::size_t rank) const { return labels_[rank]; }
  std::span<const int> labels() const { return labels_; }

  bool operator==(const Cut&) const = default;

 private:
  int k_;
  int n_;
  CutFamily family_;
  std::vector<int> labels_;
};

/// Every label lies in supp(x) ∪ {k+1}.
bool is_non_opposite(const Cut& cut);

/// Each point goes to its largest coordinate, ties to the lowest index.
Cut argmax_cut(int k, int n);

/// Canonical LP value (1/n)·Σ w(e).
Rational lpc(const WeightFunction& w);

/// Σ w(e) over edges whose endpoints get different labels.
Rational cost(const Cut& cut, const WeightFunction& w);

/// Weights flattened onto SimplexGrid edge ids, for repeated cost evaluation.
class IndexedWeights {
 public:
  IndexedWeights(const SimplexGrid& grid, const WeightFunction& w);
  Rational cost(const Cut& cut) const;

 private:
  int k_;
  int n_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<Rational> weights_;
};

}  // namespace mwgap
