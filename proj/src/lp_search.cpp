#include "mwgap/lp_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace mwgap {

namespace {

constexpr double kPriceEps = 1e-12;
constexpr double kPivotEps = 1e-9;
constexpr double kFeasTol = 1e-10;
constexpr double kPerturbation = 1e-7;
constexpr std::size_t kMaxPivots = 2000000;
constexpr std::size_t kRefactorEvery = 50;
constexpr int kDegenerateRun = 50;
constexpr int kExactBits = 40;

}  // namespace

PathConstraint PathConstraint::from_paths(Kind kind, int face, const DualGraph& g,
                                          const std::vector<std::vector<int>>& paths) {
  std::map<std::size_t, int> mult;
  for (const auto& path : paths) {
    for (int e : path) ++mult[g.edges()[static_cast<std::size_t>(e)].primal];
  }
  PathConstraint c;
  c.kind = kind;
  c.face = face;
  c.terms.assign(mult.begin(), mult.end());
  return c;
}

MasterLp::MasterLp(std::size_t edges, int n) : m_(edges), n_(n) {
  if (edges == 0 || n < 1) throw std::invalid_argument("empty master problem");
  basis_.resize(m_);
  row_of_.assign(m_, -1);
  for (std::size_t i = 0; i < m_; ++i) {
    basis_[i] = i;
    row_of_[i] = static_cast<std::ptrdiff_t>(i);
  }
  binv_ = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m_), static_cast<Eigen::Index>(m_));
  // Deterministic perturbation of the bounds 1/n breaks the heavy degeneracy
  // of the packing dual. Only the basis is used, never these values.
  rhs_.resize(static_cast<Eigen::Index>(m_));
  for (std::size_t e = 0; e < m_; ++e) {
    const double jitter = static_cast<double>((e * 7919 + 13) % 1009) / 1009.0;
    rhs_[static_cast<Eigen::Index>(e)] = (1.0 + kPerturbation * (1.0 + jitter)) / n;
  }
  xb_ = rhs_;
}

void MasterLp::add(PathConstraint constraint) {
  for (const auto& [e, mult] : constraint.terms) {
    if (e >= m_ || mult <= 0) throw std::invalid_argument("constraint term out of range");
  }
  constraints_.push_back(std::move(constraint));
  row_of_.push_back(-1);
}

void MasterLp::column(std::size_t var, Eigen::VectorXd& out) const {
  out.setZero(static_cast<Eigen::Index>(m_));
  if (var < m_) {
    out[static_cast<Eigen::Index>(var)] = 1.0;
    return;
  }
  for (const auto& [e, mult] : constraints_[var - m_].terms) out[static_cast<Eigen::Index>(e)] += mult;
}

double MasterLp::dot_column(std::size_t var, const Eigen::VectorXd& v) const {
  if (var < m_) return v[static_cast<Eigen::Index>(var)];
  double s = 0.0;
  for (const auto& [e, mult] : constraints_[var - m_].terms) s += mult * v[static_cast<Eigen::Index>(e)];
  return s;
}

void MasterLp::refactor() {
  const auto m = static_cast<Eigen::Index>(m_);
  Eigen::MatrixXd b(m, m);
  Eigen::VectorXd col;
  for (Eigen::Index r = 0; r < m; ++r) {
    column(basis_[static_cast<std::size_t>(r)], col);
    b.col(r) = col;
  }
  binv_ = b.partialPivLu().inverse();
  xb_ = binv_ * rhs_;
  for (Eigen::Index r = 0; r < m; ++r) {
    if (xb_[r] < 0.0 && xb_[r] > -1e-12) xb_[r] = 0.0;
  }
  since_refactor_ = 0;
}

LpSolution MasterLp::solve() {
  const auto m = static_cast<Eigen::Index>(m_);
  const std::size_t vars = m_ + constraints_.size();
  LpSolution out;
  Eigen::VectorXd pi(m);
  Eigen::VectorXd u;
  int degenerate = 0;
  bool fresh = false;

  for (;;) {
    if (since_refactor_ >= kRefactorEvery) refactor();
    pi.setZero();
    for (Eigen::Index r = 0; r < m; ++r) {
      if (cost(basis_[static_cast<std::size_t>(r)]) != 0.0) pi += binv_.row(r).transpose();
    }

    const bool bland = degenerate >= kDegenerateRun;
    std::size_t entering = vars;
    double best = kPriceEps;
    for (std::size_t var = 0; var < vars; ++var) {
      if (row_of_[var] >= 0) continue;
      const double d = cost(var) - dot_column(var, pi);
      if (d > best) {
        entering = var;
        if (bland) break;
        best = d;
      }
    }
    if (entering == vars) {
      // Confirm optimality against a fresh factorization.
      if (fresh) break;
      refactor();
      fresh = true;
      continue;
    }
    fresh = false;

    column(entering, u);
    u = binv_ * u;
    // Harris two-pass ratio test.
    double bound = std::numeric_limits<double>::infinity();
    for (Eigen::Index r = 0; r < m; ++r) {
      if (u[r] > kPivotEps) bound = std::min(bound, (std::max(0.0, xb_[r]) + kFeasTol) / u[r]);
    }
    if (!std::isfinite(bound)) throw std::logic_error("master dual is unbounded");
    Eigen::Index leave = -1;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (u[r] <= kPivotEps || std::max(0.0, xb_[r]) / u[r] > bound) continue;
      if (leave < 0) {
        leave = r;
      } else if (bland) {
        if (basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)]) leave = r;
      } else if (u[r] > u[leave]) {
        leave = r;
      }
    }
    const double ratio = std::max(0.0, xb_[leave]) / u[leave];

    degenerate = ratio <= 1e-14 ? degenerate + 1 : 0;
    binv_.row(leave) /= u[leave];
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r == leave || u[r] == 0.0) continue;
      binv_.row(r) -= u[r] * binv_.row(leave);
      xb_[r] = std::max(0.0, xb_[r] - u[r] * ratio);
    }
    xb_[leave] = ratio;
    row_of_[basis_[static_cast<std::size_t>(leave)]] = -1;
    basis_[static_cast<std::size_t>(leave)] = entering;
    row_of_[entering] = leave;
    ++since_refactor_;
    if (++out.pivots > kMaxPivots) throw std::runtime_error("master problem exceeded the pivot limit");
  }

  out.weights.assign(m_, 0.0);
  double objective = 0.0;
  for (Eigen::Index r = 0; r < m; ++r) {
    out.weights[static_cast<std::size_t>(r)] = std::max(0.0, pi[r]);
    objective += out.weights[static_cast<std::size_t>(r)] / n_;
  }
  out.objective = objective;
  return out;
}

LpSolution solve_lp(const std::vector<PathConstraint>& constraints, int n) {
  const std::size_t edges = static_cast<std::size_t>(3 * n * (n + 1) / 2);
  MasterLp lp(edges, n);
  for (const auto& c : constraints) lp.add(c);
  return lp.solve();
}

SearchState search(int n, double tol, int max_iter, const SearchOptions& options) {
  if (n < 3) throw std::invalid_argument("search needs n >= 3");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const DualGraph g(n, WeightFunction(3, n));
  const std::size_t m = g.grid().edges().size();
  MasterLp lp(m, n);
  SearchState state;
  state.n = n;
  state.tol = tol;
  state.weights.assign(m, 0.0);
  std::set<std::vector<std::pair<std::size_t, int>>> seen;
  std::vector<double> dual_weights(g.edges().size());

  for (int it = 1; it <= max_iter; ++it) {
    const LpSolution sol = lp.solve();
    state.weights = sol.weights;
    state.iterations = it;
    for (std::size_t e = 0; e < g.edges().size(); ++e) dual_weights[e] = sol.weights[g.edges()[e].primal];

    std::array<ShortestPathTree<double>, 3> trees{shortest_paths(g, dual_weights, g.outer(1)),
                                                  shortest_paths(g, dual_weights, g.outer(2)),
                                                  shortest_paths(g, dual_weights, g.outer(3))};
    std::vector<std::pair<double, int>> sums;
    sums.reserve(static_cast<std::size_t>(g.face_count()));
    for (int f = 0; f < g.face_count(); ++f) {
      const auto u = static_cast<std::size_t>(f);
      sums.emplace_back(trees[0].dist[u] + trees[1].dist[u] + trees[2].dist[u], f);
    }
    std::sort(sums.begin(), sums.end());
    const auto o2 = static_cast<std::size_t>(g.outer(2));
    const auto o3 = static_cast<std::size_t>(g.outer(3));
    const double corner = trees[0].dist[o2] + trees[0].dist[o3] + trees[1].dist[o3];

    IterationRecord rec;
    rec.iteration = it;
    rec.objective = sol.objective;
    rec.ball = sums.front().first;
    rec.corner = corner;

    auto offer = [&](PathConstraint c) {
      if (!seen.insert(c.terms).second) return;
      state.constraints.push_back(c);
      lp.add(std::move(c));
      ++rec.added;
    };
    for (const auto& [sum, face] : sums) {
      if (sum >= 1.0 - tol || rec.added >= options.cuts_per_round) break;
      std::vector<std::vector<int>> paths;
      for (const auto& tree : trees) paths.push_back(tree_path(g, tree, face));
      offer(PathConstraint::from_paths(PathConstraint::Kind::ball, face, g, paths));
    }
    if (corner < 1.0 - tol) {
      offer(PathConstraint::from_paths(PathConstraint::Kind::corner, -1, g,
                                       {tree_path(g, trees[0], g.outer(2)), tree_path(g, trees[0], g.outer(3)),
                                        tree_path(g, trees[1], g.outer(3))}));
    }
    const bool violated = rec.ball < 1.0 - tol || corner < 1.0 - tol;
    state.log.push_back(rec);
    if (!violated) {
      state.converged = true;
      break;
    }
    if (rec.added == 0) break;  // only known witnesses are violated: numerical stall
  }

  WeightFunction rounded(3, n);
  const double scale = std::ldexp(1.0, kExactBits);
  for (std::size_t e = 0; e < m; ++e) {
    const double q = std::round(std::max(0.0, state.weights[e]) * scale);
    if (q <= 0.0) continue;
    Rational w(mpz_class(static_cast<long>(q)), mpz_class(1));
    w /= Rational(mpz_class(1) << kExactBits);
    rounded.set(g.grid().edges()[e], w);
  }
  const Certificate first = certify(n, rounded, Family::nonopposite, Rational(1));
  state.bound = first.overall;
  if (sgn(state.bound) > 0) {
    state.exact = rounded.scaled(1 / state.bound);
    state.certificate = certify(n, state.exact, Family::nonopposite, Rational(1));
    state.lpc_exact = lpc(state.exact);
    state.certified = state.certificate.pass;
  } else {
    state.exact = rounded;
    state.certificate = first;
  }
  return state;
}

}  // namespace mwgap
