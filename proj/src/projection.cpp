#include "mwgap/projection.hpp"

#include "mwgap/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mwgap {

namespace {

std::uint64_t binom(int a, int b) { return (b < 0 || b > a) ? 0 : composition_count(b + 1, a - b); }

Rational clamp_at_zero(Rational q) { return sgn(q) < 0 ? Rational(0) : q; }

}  // namespace

RestrictionResult restrict_triple(const Cut& cut, const std::array<int, 3>& triple) {
  const int k = cut.k();
  for (int j = 0; j < 3; ++j) {
    if (triple[j] < 1 || triple[j] > k) throw std::invalid_argument("face index out of range");
    for (int t = 0; t < j; ++t) {
      if (triple[t] == triple[j]) throw std::invalid_argument("face indices must be distinct");
    }
  }
  const std::array<int, 3> face{triple[0] - 1, triple[1] - 1, triple[2] - 1};
  const auto points = enumerate_points(3, cut.n());
  std::vector<int> raw;
  std::vector<int> fixed;
  std::vector<GridPoint> bad;
  raw.reserve(points.size());
  fixed.reserve(points.size());
  for (const auto& x : points) {
    const int label = cut.label(embed_from_face(x, k, face));
    int r = 4;
    for (int j = 0; j < 3; ++j) {
      if (label == triple[j]) r = j + 1;
    }
    raw.push_back(r);
    const bool is_bad = x.support_size() == 2 && r != 4 && !x.supports(r);
    if (is_bad) bad.push_back(x);
    fixed.push_back(is_bad ? 4 : r);
  }
  return {Cut(3, cut.n(), CutFamily::extended, std::move(raw)), Cut(3, cut.n(), CutFamily::nonopposite, std::move(fixed)),
          std::move(bad)};
}

namespace {

void check_injection(const Cut& cut, const std::vector<int>& f) {
  const int k = static_cast<int>(f.size());
  if (k < 2 || k > cut.k()) throw std::invalid_argument("injection needs 2 <= k <= K");
  std::vector<bool> used(static_cast<std::size_t>(cut.k()) + 1, false);
  for (int v : f) {
    if (v < 1 || v > cut.k()) throw std::invalid_argument("injection value out of range");
    if (used[static_cast<std::size_t>(v)]) throw std::invalid_argument("map is not injective");
    used[static_cast<std::size_t>(v)] = true;
  }
}

GridPoint compose(const GridPoint& x, const std::vector<int>& f, int big_k) {
  std::vector<int> c(static_cast<std::size_t>(big_k), 0);
  for (std::size_t i = 0; i < f.size(); ++i) c[static_cast<std::size_t>(f[i] - 1)] = x[i];
  return GridPoint(std::move(c));
}

}  // namespace

Cut restrict_injection(const Cut& cut, const std::vector<int>& f) {
  check_injection(cut, f);
  const int k = static_cast<int>(f.size());
  return Cut::from_function(k, cut.n(), CutFamily::nonopposite, [&](const GridPoint& x) {
    const int label = cut.label(compose(x, f, cut.k()));
    for (int i = 1; i <= k; ++i) {
      if (f[static_cast<std::size_t>(i - 1)] == label && x.supports(i)) return i;
    }
    return k + 1;
  });
}

bool is_bad_under_injection(const Cut& cut, const std::vector<int>& f, const GridPoint& x) {
  check_injection(cut, f);
  const int label = cut.label(compose(x, f, cut.k()));
  for (int i = 1; i <= static_cast<int>(f.size()); ++i) {
    if (f[static_cast<std::size_t>(i - 1)] == label && !x.supports(i)) return true;
  }
  return false;
}

DProfile d_profile(const Cut& cut) {
  const int k = cut.k();
  const int n = cut.n();
  DProfile out;
  std::uint64_t total = 0;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      auto& labels = out.per_pair[{i, j}];
      for (int t = 0; t <= n; ++t) {
        std::vector<int> c(static_cast<std::size_t>(k), 0);
        c[static_cast<std::size_t>(i - 1)] = t;
        c[static_cast<std::size_t>(j - 1)] = n - t;
        labels.insert(cut.label(GridPoint(std::move(c))));
      }
      total += labels.size();
    }
  }
  out.mean = Rational(static_cast<long>(total)) / Rational(static_cast<long>(binom(k, 2)));
  return out;
}

ProjectionReport check_projection_bounds(const Cut& cut, std::uint64_t samples, std::uint64_t seed) {
  const int k = cut.k();
  const int n = cut.n();
  if (k < 3) throw std::invalid_argument("projection bounds need k >= 3");
  ProjectionReport report;
  const Rational d = d_profile(cut).mean;
  report.refined_bound = clamp_at_zero(1 - 3 * (d - 2) / (k - 2));
  report.coarse_bound = clamp_at_zero(1 - Rational(3 * (n - 1), k - 2));
  report.coarse_bound.canonicalize();

  auto non_opposite = [&](const std::array<int, 3>& t) { return restrict_triple(cut, t).bad_points.empty(); };

  if (k <= 12) {
    for (int a = 1; a <= k; ++a) {
      for (int b = a + 1; b <= k; ++b) {
        for (int c = b + 1; c <= k; ++c) {
          ++report.triples;
          if (non_opposite({a, b, c})) ++report.non_opposite;
        }
      }
    }
    report.fraction = Rational(static_cast<long>(report.non_opposite)) / Rational(static_cast<long>(report.triples));
    report.ok = report.fraction >= report.refined_bound && report.fraction >= report.coarse_bound;
    return report;
  }

  report.exhaustive = false;
  Rng rng = stream_rng(seed, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::array<int, 3> t{};
    for (int j = 0; j < 3; ++j) {
      bool fresh = false;
      while (!fresh) {
        t[j] = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
        fresh = std::find(t.begin(), t.begin() + j, t[j]) == t.begin() + j;
      }
    }
    ++report.triples;
    if (non_opposite(t)) ++report.non_opposite;
  }
  report.fraction = Rational(static_cast<long>(report.non_opposite)) / Rational(static_cast<long>(report.triples));
  const double f = report.fraction.get_d();
  report.ci3sigma = 3.0 * std::sqrt(f * (1.0 - f) / static_cast<double>(report.triples));
  const double hi = f + report.ci3sigma;
  report.ok = hi >= report.refined_bound.get_d() && hi >= report.coarse_bound.get_d();
  return report;
}

CostLemmaChecker::CostLemmaChecker(int k, int n)
    : k_(k),
      n_(n),
      grid_(k, n),
      hat_(grid_, build_w_hat(k, n)),
      prime_(grid_, build_w_prime(k, n)),
      tilde_(grid_, build_w_tilde(k, n)) {}

CostLemmaReport CostLemmaChecker::check(const Cut& cut) const {
  if (cut.k() != k_ || cut.n() != n_) throw std::invalid_argument("cut does not match the checker's grid");
  CostLemmaReport r;
  r.d_mean = d_profile(cut).mean;
  r.cost_hat = hat_.cost(cut);
  r.cost_prime = prime_.cost(cut);
  r.cost_tilde = tilde_.cost(cut);
  r.hat_bound = 1 - (r.d_mean - 2) / (k_ - 2);
  r.prime_bound = r.d_mean - 1;
  r.hat_ok = r.cost_hat >= r.hat_bound;
  r.prime_ok = r.cost_prime >= r.prime_bound;
  r.tilde_ok = r.cost_tilde >= 1;
  if (!r.hat_ok) r.violations.push_back("cost(P, ŵ) short by " + to_string(r.hat_bound - r.cost_hat));
  if (!r.prime_ok) r.violations.push_back("cost(P, w′) short by " + to_string(r.prime_bound - r.cost_prime));
  if (!r.tilde_ok) r.violations.push_back("cost(P, w̃) short by " + to_string(1 - r.cost_tilde));
  return r;
}

CostLemmaReport check_cost_lemmas(const Cut& cut, int n) {
  if (cut.n() != n) throw std::invalid_argument("cut is on a different grid");
  return CostLemmaChecker(cut.k(), n).check(cut);
}

}  // namespace mwgap
