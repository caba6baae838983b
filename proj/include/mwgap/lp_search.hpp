#pragma once

// Cutting-plane search for weights on Δ_{3,n} of least canonical LP value
// whose dual-graph path systems all have length at least one.

#include "mwgap/dual.hpp"
#include "mwgap/rational.hpp"
#include "mwgap/simplex.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mwgap {

/// Σ mult(e)·w(e) >= 1 over SimplexGrid edge ids of Δ_{3,n}.
struct PathConstraint {
  enum class Kind { ball, corner, manual };
  Kind kind = Kind::manual;
  int face = -1;  // ball witnesses only
  std::vector<std::pair<std::size_t, int>> terms;  // (edge id, multiplicity), ascending ids

  static PathConstraint from_paths(Kind kind, int face, const DualGraph& g, const std::vector<std::vector<int>>& paths);
};

struct LpSolution {
  std::vector<double> weights;
  double objective = 0.0;
  std::size_t pivots = 0;
};

/// Restricted master problem  min Σ_e w_e / n  s.t.  A w >= 1, w >= 0,
/// solved through its packing dual  max Σ y  s.t.  Aᵀy <= 1/n, y >= 0
/// with a revised simplex (explicit basis inverse, Dantzig pricing, Bland's
/// rule after a run of degenerate pivots). Adding a constraint adds a dual
/// column, so the previous basis stays feasible and is reused.
class MasterLp {
 public:
  MasterLp(std::size_t edges, int n);

  void add(PathConstraint constraint);
  const std::vector<PathConstraint>& constraints() const { return constraints_; }
  LpSolution solve();

 private:
  double cost(std::size_t var) const { return var < m_ ? 0.0 : 1.0; }
  void column(std::size_t var, Eigen::VectorXd& out) const;
  double dot_column(std::size_t var, const Eigen::VectorXd& v) const;
  void refactor();

  std::size_t m_;
  int n_;
  Eigen::VectorXd rhs_;
  std::vector<PathConstraint> constraints_;
  std::vector<std::size_t> basis_;    // basic variable per row
  std::vector<std::ptrdiff_t> row_of_;  // row of a basic variable, -1 otherwise
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
  std::size_t since_refactor_ = 0;
};

/// One-shot solve of the master problem.
LpSolution solve_lp(const std::vector<PathConstraint>& constraints, int n);

struct IterationRecord {
  int iteration = 0;
  double objective = 0.0;
  double ball = 0.0;    // min over faces of Σ_i d(O_i, F)
  double corner = 0.0;  // d12 + d13 + d23
  std::size_t added = 0;
};

struct SearchState {
  int n = 0;
  double tol = 0.0;
  std::vector<double> weights;
  std::vector<PathConstraint> constraints;
  std::vector<IterationRecord> log;
  bool converged = false;  // separation found nothing below 1 - tol
  int iterations = 0;

  // Exact recheck: weights rounded to multiples of 2^-40, divided by their
  // certified bound, then certified at target 1.
  WeightFunction exact{3, 3};
  Rational bound;
  Rational lpc_exact;
  Certificate certificate;
  bool certified = false;
};

struct SearchOptions {
  std::size_t cuts_per_round = 1024;  // ball witnesses added per round, most violated first
};

SearchState search(int n, double tol, int max_iter, const SearchOptions& options = {});

}  // namespace mwgap
