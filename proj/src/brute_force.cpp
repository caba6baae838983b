#include "mwgap/brute_force.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace mwgap {

namespace {

struct Search {
  std::vector<std::vector<int>> domain;                                // per rank
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> back;  // earlier neighbours
  std::vector<int> labels;
  std::vector<int> best_labels;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

  void run(std::size_t r, std::int64_t partial) {
    if (partial >= best) return;
    if (r == labels.size()) {
      best = partial;
      best_labels = labels;
      return;
    }
    for (int l : domain[r]) {
      std::int64_t added = 0;
      for (const auto& [other, w] : back[r]) {
        if (labels[other] != l) added += w;
      }
      labels[r] = l;
      run(r + 1, partial + added);
    }
  }
};

}  // namespace

BruteForceResult brute_force_min_cut(int n, const WeightFunction& w, Family family) {
  if (w.k() != 3 || w.n() != n) throw std::invalid_argument("brute force needs weights on Δ_{3,n}");
  if (n < 1 || n > kBruteForceMaxN) {
    throw std::invalid_argument("brute force is limited to n <= " + std::to_string(kBruteForceMaxN));
  }
  const SimplexGrid grid(3, n);

  // Common denominator turns every weight into an exact int64 numerator.
  mpz_class denom = 1;
  for (const auto& [e, weight] : w.entries()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), weight.get_den_mpz_t());
  Rational scaled_total = w.total() * denom;
  if (scaled_total.get_num() >= mpz_class(std::numeric_limits<std::int64_t>::max() / 2)) {
    throw std::invalid_argument("weights too fine-grained for the exhaustive search");
  }

  Search s;
  s.domain.resize(grid.size());
  s.back.resize(grid.size());
  s.labels.assign(grid.size(), 0);
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const auto& p = grid.points()[r];
    if (p.is_terminal()) {
      s.domain[r] = p.support();
    } else if (family == Family::nonopposite) {
      s.domain[r] = p.support();
      s.domain[r].push_back(4);
    } else {
      s.domain[r] = {1, 2, 3};
    }
    for (std::size_t e : grid.incident(r)) {
      const auto [a, b] = grid.endpoints(e);
      const std::size_t other = a == r ? b : a;
      if (other >= r) continue;
      Rational scaled = w.at(grid.edges()[e]) * denom;
      s.back[r].emplace_back(other, scaled.get_num().get_si());
    }
  }
  s.best = scaled_total.get_num().get_si() + 1;
  s.run(0, 0);

  BruteForceResult out{Rational(s.best) / Rational(denom),
                       Cut(3, n, family == Family::nonopposite ? CutFamily::nonopposite : CutFamily::kway,
                           std::move(s.best_labels))};
  out.minimum.canonicalize();
  return out;
}

}  // namespace mwgap
