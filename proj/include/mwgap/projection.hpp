#pragma once

// Restrictions of k-way cuts to lower-dimensional faces and the
// statistics that control how often those restrictions are non-opposite.

#include "mwgap/rational.hpp"
#include "mwgap/simplex.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mwgap {

struct RestrictionResult {
  Cut raw;    // labels in [4], before fix-up
  Cut fixed;  // bad points moved to 4
  std::vector<GridPoint> bad_points;
};

/// Cut induced on the face (i1, i2, i3) (1-based, distinct): label j when the
/// embedded point carries label i_j, otherwise 4.
RestrictionResult restrict_triple(const Cut& cut, const std::array<int, 3>& triple);

/// Restriction through an injection f: [k] -> [K] (1-based
/// values, f[i-1] = f(i)). Result is a non-opposite cut of Δ_{k,n}.
Cut restrict_injection(const Cut& cut, const std::vector<int>& f);

/// Whether point x of Δ_{k,n} is bad under (cut, f): P(x∘f) ∈ f([k] \ supp(x)).
bool is_bad_under_injection(const Cut& cut, const std::vector<int>& f, const GridPoint& x);

struct DProfile {
  std::map<std::pair<int, int>, std::set<int>> per_pair;  // {i < j} -> labels on the line
  Rational mean;
};

DProfile d_profile(const Cut& cut);

struct ProjectionReport {
  std::uint64_t triples = 0;
  std::uint64_t non_opposite = 0;
  bool exhaustive = true;
  Rational fraction;
  Rational refined_bound;  // max(0, 1 - 3(D-2)/(k-2))
  Rational coarse_bound;   // max(0, 1 - 3(n-1)/(k-2))
  double ci3sigma = 0.0;   // sampled mode only
  bool ok = true;
};

/// Exhaustive over all C(k,3) triples for k <= 12; beyond that `samples`
/// uniformly drawn triples with a 3σ radius added to the comparison.
ProjectionReport check_projection_bounds(const Cut& cut, std::uint64_t samples = 20000, std::uint64_t seed = 1);

struct CostLemmaReport {
  Rational d_mean;
  Rational cost_hat;
  Rational cost_prime;
  Rational cost_tilde;
  Rational hat_bound;    // 1 - (D-2)/(k-2)
  Rational prime_bound;  // D - 1
  bool hat_ok = true;
  bool prime_ok = true;
  bool tilde_ok = true;
  bool ok() const { return hat_ok && prime_ok && tilde_ok; }
  std::vector<std::string> violations;
};

/// Weights and grid for one (k, n), reused across many cuts.
class CostLemmaChecker {
 public:
  CostLemmaChecker(int k, int n);
  CostLemmaReport check(const Cut& cut) const;
  int k() const { return k_; }
  int n() const { return n_; }

 private:
  int k_;
  int n_;
  SimplexGrid grid_;
  IndexedWeights hat_;
  IndexedWeights prime_;
  IndexedWeights tilde_;
};

CostLemmaReport check_cost_lemmas(const Cut& cut, int n);

/// Labels every non-terminal point uniformly from [k].
template <class Rng>
Cut random_kway_cut(int k, int n, Rng& rng);

}  // namespace mwgap

#include "mwgap/random.hpp"

namespace mwgap {

template <class Rng>
Cut random_kway_cut(int k, int n, Rng& rng) {
  return Cut::from_function(k, n, CutFamily::kway, [&](const GridPoint& p) {
    if (p.is_terminal()) return p.support().front();
    return 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
  });
}

}  // namespace mwgap
