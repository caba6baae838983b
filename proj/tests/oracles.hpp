#pragma once

// Independent reference implementations used only by the tests. Each one
// trades speed for obviousness and shares no code path with the library.

#include "mwgap/dual.hpp"
#include "mwgap/rounding.hpp"
#include "mwgap/simplex.hpp"
#include "mwgap/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using mwgap::Rational;

/// All compositions of n into k parts, by recursion on the first part.
inline std::vector<std::vector<int>> compositions(int k, int n) {
  if (k == 1) return {{n}};
  std::vector<std::vector<int>> out;
  for (int first = n; first >= 0; --first) {
    for (auto rest : compositions(k - 1, n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Unordered pairs whose real L1 distance is exactly 2/n.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> unit_pairs(int k, int n) {
  const auto pts = compositions(k, n);
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      int l1 = 0;
      for (int i = 0; i < k; ++i) l1 += std::abs(pts[a][i] - pts[b][i]);
      if (l1 == 2) out.insert({pts[a], pts[b]});
    }
  }
  return out;
}

inline long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

/// ŵ as the literal average over all C(k,3) faces of the embedded w3.
inline mwgap::WeightFunction literal_w_hat(int k, int n) {
  const mwgap::WeightFunction w3 = mwgap::build_w3(n);
  mwgap::WeightFunction out(k, n);
  const Rational faces(binom(k, 3));
  for (const auto& e : mwgap::enumerate_edges(k, n)) {
    Rational sum = 0;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        for (int c = b + 1; c < k; ++c) {
          bool inside = true;
          for (int t = 0; t < k; ++t) {
            if (t != a && t != b && t != c && (e.u()[t] != 0 || e.v()[t] != 0)) inside = false;
          }
          if (!inside) continue;
          const mwgap::GridPoint pu({e.u()[a], e.u()[b], e.u()[c]});
          const mwgap::GridPoint pv({e.v()[a], e.v()[b], e.v()[c]});
          sum += w3.at(mwgap::Edge(pu, pv));
        }
      }
    }
    out.set(e, sum / faces);
  }
  return out;
}

/// Bellman-Ford from `source`; outer nodes other than the source are sinks.
inline std::vector<std::optional<Rational>> bellman_ford(const mwgap::DualGraph& g, int source) {
  std::vector<std::optional<Rational>> dist(static_cast<std::size_t>(g.node_count()));
  dist[static_cast<std::size_t>(source)] = Rational(0);
  for (int round = 0; round < g.node_count(); ++round) {
    bool changed = false;
    for (const auto& e : g.edges()) {
      for (auto [from, to] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        const auto& df = dist[static_cast<std::size_t>(from)];
        if (!df || (from != source && g.is_outer(from))) continue;
        auto& dt = dist[static_cast<std::size_t>(to)];
        const Rational cand = *df + e.weight;
        if (!dt || cand < *dt) {
          dt = cand;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return dist;
}

/// Minimum cost over every labeling of Δ_{3,n} in the family, no pruning.
inline Rational exhaustive_min(int n, const mwgap::WeightFunction& w, mwgap::Family family) {
  const auto pts = mwgap::enumerate_points(3, n);
  std::vector<std::vector<int>> domain;
  for (const auto& p : pts) {
    if (p.is_terminal()) {
      domain.push_back(p.support());
    } else if (family == mwgap::Family::nonopposite) {
      auto d = p.support();
      d.push_back(4);
      domain.push_back(d);
    } else {
      domain.push_back({1, 2, 3});
    }
  }
  std::vector<std::size_t> pick(pts.size(), 0);
  std::optional<Rational> best;
  for (;;) {
    std::vector<int> labels(pts.size());
    for (std::size_t r = 0; r < pts.size(); ++r) labels[r] = domain[r][pick[r]];
    const mwgap::Cut cut(3, n, family == mwgap::Family::nonopposite ? mwgap::CutFamily::nonopposite : mwgap::CutFamily::kway,
                         labels);
    const Rational c = mwgap::cost(cut, w);
    if (!best || c < *best) best = c;
    std::size_t r = 0;
    while (r < pts.size() && ++pick[r] == domain[r].size()) pick[r++] = 0;
    if (r == pts.size()) break;
  }
  return *best;
}

/// Ball label by angular sector around the center: the three rays split the
/// plane into three cones and each cone meets the triangle in one region.
inline int sector_label(const mwgap::BallCut& ball, const std::array<double, 3>& x) {
  const double h = std::sqrt(3.0) / 2.0;
  auto plane = [&](double x1, double x2, double x3) {
    (void)x1;
    return std::pair{x2 + x3 / 2.0, h * x3};
  };
  const auto [cx, cy] = plane(ball.center[0].get_d(), ball.center[1].get_d(), ball.center[2].get_d());
  auto angle = [&](std::pair<double, double> p) { return std::atan2(p.second - cy, p.first - cx); };

  std::vector<double> rays;
  for (int s = 0; s < 3; ++s) {
    std::vector<int> lines;
    for (int a = 0; a < 3; ++a) {
      if (a != s) lines.push_back(a);
    }
    const int a = ball.side_choice[static_cast<std::size_t>(s)] ? lines[1] : lines[0];
    std::array<double, 3> end{};
    end[static_cast<std::size_t>(a)] = ball.center[static_cast<std::size_t>(a)].get_d();
    end[static_cast<std::size_t>(3 - a - s)] = 1.0 - ball.center[static_cast<std::size_t>(a)].get_d();
    rays.push_back(angle(plane(end[0], end[1], end[2])));
  }
  std::sort(rays.begin(), rays.end());
  auto sector = [&](double theta) {
    int idx = 0;
    for (double r : rays) {
      if (theta > r) ++idx;
    }
    return idx % 3;
  };
  const int target = sector(angle(plane(x[0], x[1], x[2])));
  for (int i = 0; i < 3; ++i) {
    std::array<double, 3> e{};
    e[static_cast<std::size_t>(i)] = 1.0;
    if (sector(angle(plane(e[0], e[1], e[2]))) == target) return i + 1;
  }
  return 0;
}

}  // namespace oracle
