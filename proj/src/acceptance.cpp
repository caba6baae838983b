#include "mwgap/acceptance.hpp"

#include "mwgap/brute_force.hpp"
#include "mwgap/dual.hpp"
#include "mwgap/lp_search.hpp"
#include "mwgap/normalize.hpp"
#include "mwgap/projection.hpp"
#include "mwgap/random.hpp"
#include "mwgap/rounding.hpp"
#include "mwgap/weights.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace mwgap {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

/// Collects sub-checks; the criterion passes when all of them do.
struct Report {
  CriterionResult& r;
  bool ok = true;

  void check(bool cond, const std::string& what) {
    if (!cond) ok = false;
    r.details.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
  }
};

constexpr std::uint64_t kSeedNormalize = 20240501;
constexpr std::uint64_t kSeedProjection = 20240502;
constexpr std::uint64_t kSeedBruteForce = 20240503;
constexpr std::uint64_t kSeedInjection = 20240504;
constexpr std::uint64_t kSeedDensity = 20240505;

constexpr int kMaxGridN = 30;

void canonical_lp_values(Report& rep) {
  const auto t0 = Clock::now();
  bool w3_ok = true;
  for (int n = 3; n <= kMaxGridN; n += 3) w3_ok = w3_ok && lpc(build_w3(n)) == frac(5, 6) + frac(1, 2 * n);
  rep.check(w3_ok, "lpc(w3(n)) = 5/6 + 1/(2n) for n = 3, 6, ..., 30");
  const Rational fk = lpc(build_fk());
  rep.check(fk == frac(7, 8), "lpc(fk) = " + to_string(fk));
  bool prime_ok = true;
  bool tilde_ok = true;
  for (int k = 3; k <= 8; ++k) {
    for (int n : {3, 6}) {
      prime_ok = prime_ok && lpc(build_w_prime(k, n)) == 1;
      const Rational expected = frac(k - 2, k - 1) * (frac(5, 6) + frac(1, 2 * n)) + frac(1, k - 1);
      tilde_ok = tilde_ok && lpc(build_w_tilde(k, n)) == expected;
    }
  }
  rep.check(prime_ok, "lpc(w′(k,n)) = 1 for k = 3..8, n = 3, 6");
  rep.check(tilde_ok, "lpc(w̃(k,n)) = ((k-2)/(k-1))(5/6 + 1/(2n)) + 1/(k-1) for k = 3..8, n = 3, 6");
  const double s = since(t0);
  rep.check(s < 5.0, fmt("runtime %.2f s < 5 s", s));
}

void nonopposite_certificates(Report& rep) {
  bool all = true;
  double at30 = 0.0;
  for (int n = 3; n <= kMaxGridN; n += 3) {
    const auto t0 = Clock::now();
    const Certificate c = certify(n, build_w3(n), Family::nonopposite, Rational(1));
    if (n == kMaxGridN) at30 = since(t0);
    bool pairs = true;
    for (const auto& d : c.pairwise) pairs = pairs && d >= frac(1, 3);
    const bool ok = c.pass && pairs && c.ball >= 1;
    all = all && ok;
    if (!ok || n == 3 || n == kMaxGridN) {
      rep.check(ok, "n = " + std::to_string(n) + ": overall " + to_string(c.overall) + ", ball " + to_string(c.ball) +
                        ", min pairwise " + to_string(std::min({c.pairwise[0], c.pairwise[1], c.pairwise[2]})));
    }
  }
  rep.check(all, "certify(w3(n), nonopposite, 1) passes with pairwise >= 1/3 and ball >= 1 for n = 3..30");
  rep.check(at30 < 30.0, fmt("n = 30 runtime %.2f s < 30 s", at30));
}

void potential_checks(Report& rep) {
  for (int n = 3; n <= kMaxGridN; n += 3) {
    const PotentialReport p = check_potentials(n, build_w3(n));
    if (!p.ok) {
      rep.check(false, "n = " + std::to_string(n) + ": " + p.check + " Φ_" + std::to_string(p.index) + " " + p.message +
                           " (" + to_string(p.lhs) + " vs " + to_string(p.rhs) + ")");
    }
  }
  rep.check(rep.ok, "Lipschitz, outer margin 1/3 and face sums >= 1 for n = 3, 6, ..., 30");
}

WeightFunction random_weights(int n, Rng& rng) {
  WeightFunction w(3, n);
  for (const auto& e : enumerate_edges(3, n)) w.set(e, frac(static_cast<long>(uniform_below(rng, 6)), 5));
  return w;
}

void brute_force_agreement(Report& rep) {
  const Rational w3_nonop = brute_force_min_cut(3, build_w3(3), Family::nonopposite).minimum;
  rep.check(w3_nonop >= 1, "brute force nonopposite min of w3(3) = " + to_string(w3_nonop) + " >= 1");
  const Rational fk = brute_force_min_cut(2, build_fk(), Family::nonopposite).minimum;
  rep.check(fk == 1, "brute force nonopposite min of fk = " + to_string(fk));
  const Rational w3_three = brute_force_min_cut(3, build_w3(3), Family::threeway).minimum;
  rep.check(w3_three >= frac(2, 3), "brute force 3-way min of w3(3) = " + to_string(w3_three) + " >= 2/3");

  Rng rng = stream_rng(kSeedBruteForce, 0);
  int sound = 0;
  for (int t = 0; t < 20; ++t) {
    const WeightFunction w = random_weights(3, rng);
    bool ok = true;
    for (Family f : {Family::nonopposite, Family::threeway}) {
      const Rational brute = brute_force_min_cut(3, w, f).minimum;
      const Rational bound = certify(3, w, f, Rational(0)).overall;
      if (brute < bound) {
        ok = false;
        rep.check(false, "trial " + std::to_string(t) + " " + family_name(f) + ": brute " + to_string(brute) +
                             " < certificate " + to_string(bound));
      }
    }
    sound += ok ? 1 : 0;
  }
  rep.check(sound == 20, std::to_string(sound) + "/20 random weight functions: brute force >= certificate, both families");
}

void normalization(Report& rep) {
  for (int n : {3, 6}) {
    const SimplexGrid grid(3, n);
    const WeightFunction w = build_w3(n);
    Rng rng = stream_rng(kSeedNormalize, static_cast<std::uint64_t>(n));
    int good = 0;
    std::string first_failure;
    for (int t = 0; t < 1000; ++t) {
      const Cut in = random_nonopposite_cut(n, rng);
      std::string why;
      try {
        const Cut out = normalize_cut(in);
        const CutShape shape = classify_shape(out);
        bool kept = true;
        for (std::size_t e = 0; e < grid.edges().size(); ++e) {
          const auto [a, b] = grid.endpoints(e);
          if (in.label_at(a) == in.label_at(b) && out.label_at(a) != out.label_at(b)) kept = false;
        }
        if (shape == CutShape::other) why = "result is neither ball nor 3-corner";
        if (!kept) why = "an uncut edge became cut";
        if (cost(out, w) > cost(in, w)) why = "cost increased";
      } catch (const StructuralError& e) {
        why = std::string("structural error: ") + e.what();
      }
      if (why.empty()) {
        ++good;
      } else if (first_failure.empty()) {
        first_failure = "trial " + std::to_string(t) + ": " + why;
      }
    }
    rep.check(good == 1000, "n = " + std::to_string(n) + ": " + std::to_string(good) + "/1000 normalized to ball/3-corner, cost kept" +
                                (first_failure.empty() ? "" : " (" + first_failure + ")"));
  }
}

constexpr std::array<std::pair<int, int>, 3> kCorpus{{{5, 3}, {6, 3}, {8, 3}}};

void projection_bounds(Report& rep) {
  for (const auto& [k, n] : kCorpus) {
    Rng rng = stream_rng(kSeedProjection, static_cast<std::uint64_t>(k));
    int good = 0;
    Rational worst_margin(2);
    for (int t = 0; t < 1000; ++t) {
      const Cut cut = random_kway_cut(k, n, rng);
      const ProjectionReport r = check_projection_bounds(cut);
      if (r.ok) ++good;
      const Rational margin = r.fraction - std::max(r.refined_bound, r.coarse_bound);
      if (margin < worst_margin) worst_margin = margin;
    }
    rep.check(good == 1000, "(k, n) = (" + std::to_string(k) + ", " + std::to_string(n) + "): " + std::to_string(good) +
                                "/1000 cuts meet both bounds, smallest margin " + to_string(worst_margin));
  }
}

void cost_lemmas(Report& rep) {
  for (const auto& [k, n] : kCorpus) {
    const CostLemmaChecker checker(k, n);
    Rng rng = stream_rng(kSeedProjection, static_cast<std::uint64_t>(k));
    int good = 0;
    std::string first;
    for (int t = 0; t < 1000; ++t) {
      const CostLemmaReport r = checker.check(random_kway_cut(k, n, rng));
      if (r.ok()) {
        ++good;
      } else if (first.empty()) {
        first = " (trial " + std::to_string(t) + ": " + r.violations.front() + ")";
      }
    }
    rep.check(good == 1000, "(k, n) = (" + std::to_string(k) + ", " + std::to_string(n) + "): " + std::to_string(good) +
                                "/1000 cuts satisfy all three cost inequalities" + first);
  }
  const Rational value = lpc(build_w_tilde(8, 30));
  const Rational ratio = 1 / value;
  rep.check(ratio >= frac(118, 100), "k = 8, n = 30: certified bound 1 / lpc(w̃) = 1 / " + to_string(value) + " = " +
                                         to_string(ratio) + fmt(" ≈ %.6f >= 1.18", ratio.get_d()));
}

void injection_restriction(Report& rep) {
  constexpr int big_k = 12;
  constexpr int k = 3;
  constexpr int n = 3;
  constexpr int trials = 1000;
  Rng rng = stream_rng(kSeedInjection, 0);
  const auto points = enumerate_points(k, n);
  std::vector<int> bad(points.size(), 0);
  int valid = 0;
  for (int t = 0; t < trials; ++t) {
    const Cut cut = random_kway_cut(big_k, n, rng);
    std::vector<int> pool(big_k);
    for (int i = 0; i < big_k; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> f;
    for (int i = 0; i < k; ++i) {
      const auto j = static_cast<std::size_t>(i) + uniform_below(rng, static_cast<std::uint64_t>(big_k - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      f.push_back(pool[static_cast<std::size_t>(i)]);
    }
    const Cut restricted = restrict_injection(cut, f);
    if (is_non_opposite(restricted)) ++valid;
    for (std::size_t r = 0; r < points.size(); ++r) bad[r] += is_bad_under_injection(cut, f, points[r]) ? 1 : 0;
  }
  rep.check(valid == trials, std::to_string(valid) + "/1000 restrictions are non-opposite on every point");
  const double bound = static_cast<double>(k) / (big_k - k);
  const double sigma = std::sqrt(bound * (1.0 - bound) / trials);
  double worst = 0.0;
  for (int b : bad) worst = std::max(worst, static_cast<double>(b) / trials);
  rep.check(worst <= bound + 3 * sigma,
            fmt("max per-point bad frequency %.4f", worst) + fmt(" <= k/(K-k) + 3σ = %.4f", bound + 3 * sigma));
}

void rounding_density(Report& rep, int threads) {
  const auto t0 = Clock::now();
  constexpr std::uint64_t samples = 1000000;
  const DensityEstimate est = estimate_density(6, samples, frac(1, 5), kSeedDensity, threads);
  const double s = since(t0);
  const Edge& worst = est.edges[est.worst_edge];
  std::ostringstream pair;
  pair << "(" << worst.u()[0] << "," << worst.u()[1] << "," << worst.u()[2] << ")-(" << worst.v()[0] << ","
       << worst.v()[1] << "," << worst.v()[2] << ")";
  rep.check(est.tau_hat <= 1.2 + est.ci3sigma, fmt("tau_hat %.5f", est.tau_hat) + fmt(" <= 1.2 + %.5f", est.ci3sigma) +
                                                   " (worst pair " + pair.str() + ")");
  const double sigma = std::sqrt(0.2 * 0.8 / samples);
  rep.check(std::abs(est.corner_fraction - 0.2) <= 3 * sigma,
            fmt("corner fraction %.5f", est.corner_fraction) + fmt(" within 3σ = %.5f of 1/5", 3 * sigma));
  rep.check(s < 120.0, fmt("runtime %.2f s < 120 s", s));
}

void lp_search_window(Report& rep) {
  const auto t0 = Clock::now();
  const SearchState st = search(12, 1e-9, 1000);
  const double s = since(t0);
  rep.check(st.converged, "separation converged after " + std::to_string(st.iterations) + " rounds, " +
                              std::to_string(st.constraints.size()) + " constraints");
  rep.check(st.certified, "rescaled weights certify at exactly 1");
  const Rational lo = frac(5, 6);
  const Rational hi = frac(5, 6) + frac(1, 24) + frac(1, 1000000);
  rep.check(st.lpc_exact >= lo && st.lpc_exact <= hi,
            "lpc_exact = " + to_string(st.lpc_exact) + fmt(" ≈ %.9f in [5/6, 5/6 + 1/24 + 1e-6]", st.lpc_exact.get_d()));
  rep.check(s < 600.0, fmt("runtime %.1f s < 600 s", s));
}

}  // namespace

std::string criterion_name(int id) {
  switch (id) {
    case 1: return "Canonical LP values, exact";
    case 2: return "Non-opposite lower bound certified";
    case 3: return "Potential checks";
    case 4: return "Oracle agreement at tiny scale";
    case 5: return "Normalization property";
    case 6: return "Projection propositions, exact enumeration";
    case 7: return "Cost lemmas and k = 8 gap ratio";
    case 8: return "Injection restriction";
    case 9: return "Rounding density";
    case 10: return "LP search window";
    default: throw std::invalid_argument("no criterion " + std::to_string(id));
  }
}

CriterionResult run_criterion(int id, int threads) {
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  Report rep{r};
  const auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: canonical_lp_values(rep); break;
      case 2: nonopposite_certificates(rep); break;
      case 3: potential_checks(rep); break;
      case 4: brute_force_agreement(rep); break;
      case 5: normalization(rep); break;
      case 6: projection_bounds(rep); break;
      case 7: cost_lemmas(rep); break;
      case 8: injection_restriction(rep); break;
      case 9: rounding_density(rep, threads); break;
      case 10: lp_search_window(rep); break;
    }
  } catch (const std::exception& e) {
    rep.check(false, std::string("exception: ") + e.what());
  }
  r.pass = rep.ok;
  r.seconds = since(t0);
  return r;
}

std::string format_result(const CriterionResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s  %2d  %s  (%.2f s)", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
  return buf;
}

nlohmann::json result_to_json(const CriterionResult& r) {
  return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}, {"seconds", r.seconds}};
}

}  // namespace mwgap
