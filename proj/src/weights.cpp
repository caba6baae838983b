#include "mwgap/weights.hpp"

#include <stdexcept>
#include <string>

namespace mwgap {

namespace {

void require_w3_grid(int n) {
  if (n < 3 || n % 3 != 0) {
    throw std::invalid_argument("the Δ_3 gap needs n >= 3 divisible by 3, got " + std::to_string(n));
  }
}

std::uint64_t binom(int a, int b) { return (b < 0 || b > a) ? 0 : composition_count(b + 1, a - b); }

}  // namespace

RegionTag region_of(const std::array<int, 3>& numerators, int denominator) {
  RegionTag tag;
  bool all_small = true;
  for (int i = 0; i < 3; ++i) {
    // x_i >= 2/3  <=>  3·num >= 2·den
    if (3 * numerators[i] >= 2 * denominator) tag.corner = i + 1;
    if (3 * numerators[i] > 2 * denominator) all_small = false;
  }
  tag.hexagon = all_small;
  return tag;
}

RegionTag region_of(const GridPoint& p) {
  if (p.k() != 3) throw std::invalid_argument("regions are defined on Δ_3 only");
  return region_of({p[0], p[1], p[2]}, p.n());
}

Rational w3_edge_weight(const Edge& e) {
  if (e.k() != 3) throw std::invalid_argument("w3 is defined on Δ_3 only");
  const int n = e.n();
  require_w3_grid(n);
  const Rational rho = frac(1, 2 * n);
  const auto [a, b] = e.moved();
  const int c = 3 - a - b;
  const int m_c = e.u()[c];
  const int third = n / 3;

  if (3 * m_c > 2 * n) return 0;  // inside T_c, parallel to the side opposite e^c
  if (m_c == 0) {
    // On side (e^a, e^b): ramp down from each vertex, flat ρ in the middle.
    const int v = std::min(e.u()[b], e.v()[b]);
    const int u = std::min(e.u()[a], e.v()[a]);
    if (v <= third - 1) return rho * (third - v);
    if (u <= third - 1) return rho * (third - u);
    return rho;
  }
  return rho;
}

WeightFunction build_w3(int n) {
  require_w3_grid(n);
  WeightFunction w(3, n);
  for (const auto& e : enumerate_edges(3, n)) w.set(e, w3_edge_weight(e));
  return w;
}

WeightFunction build_fk() {
  WeightFunction w(3, 2);
  for (const auto& e : enumerate_edges(3, 2)) {
    const bool touches_vertex = e.u().is_terminal() || e.v().is_terminal();
    w.set(e, touches_vertex ? frac(1, 6) : frac(1, 4));
  }
  return w;
}

GridPoint project_to_face(const GridPoint& p, const std::array<int, 3>& face) {
  return GridPoint({p[face[0]], p[face[1]], p[face[2]]});
}

GridPoint embed_from_face(const GridPoint& p, int k, const std::array<int, 3>& face) {
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  for (int j = 0; j < 3; ++j) c[face[j]] = p[j];
  return GridPoint(std::move(c));
}

WeightFunction build_w_hat(int k, int n) {
  if (k < 3) throw std::invalid_argument("ŵ needs k >= 3");
  require_w3_grid(n);
  const Rational faces(static_cast<long>(binom(k, 3)));
  const auto base_edges = enumerate_edges(3, n);
  WeightFunction out(k, n);

  // An edge whose endpoint supports span s coordinates sits in C(k-s, 3-s)
  // faces and gets the same embedded w3 value in each of them.
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (int c = b + 1; c < k; ++c) {
        const std::array<int, 3> face{a, b, c};
        for (const auto& e : base_edges) {
          const Rational w = w3_edge_weight(e);
          if (sgn(w) == 0) continue;
          const int s = e.union_support_size();
          if (s == 3) {
            out.set(Edge(embed_from_face(e.u(), k, face), embed_from_face(e.v(), k, face)), w / faces);
          } else if (s == 2) {
            // Line edges: visit each line once, through its lowest completing face.
            const auto [i, j] = e.moved();
            const int missing = 3 - i - j;
            int lowest_other = -1;
            for (int t = 0; t < k; ++t) {
              if (t != face[i] && t != face[j]) {
                lowest_other = t;
                break;
              }
            }
            if (face[missing] != lowest_other) continue;
            out.set(Edge(embed_from_face(e.u(), k, face), embed_from_face(e.v(), k, face)),
                    w * static_cast<long>(k - 2) / faces);
          }
        }
      }
    }
  }
  return out;
}

WeightFunction build_w_prime(int k, int n) {
  if (k < 2) throw std::invalid_argument("w′ needs k >= 2");
  if (n < 2) throw std::invalid_argument("w′ needs n >= 2");
  const Rational weight = frac(1, static_cast<long>(binom(k, 2)));
  WeightFunction out(k, n);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (int t = 0; t < n; ++t) {
        std::vector<int> x(static_cast<std::size_t>(k), 0);
        std::vector<int> y(static_cast<std::size_t>(k), 0);
        x[a] = t;
        x[b] = n - t;
        y[a] = t + 1;
        y[b] = n - t - 1;
        out.set(Edge(GridPoint(std::move(x)), GridPoint(std::move(y))), weight);
      }
    }
  }
  return out;
}

WeightFunction build_w_tilde(int k, int n) {
  if (k < 3) throw std::invalid_argument("w̃ needs k >= 3");
  return linear_combination(frac(k - 2, k - 1), build_w_hat(k, n), frac(1, k - 1), build_w_prime(k, n));
}

WeightFunction build_named(std::string_view name, int k, int n) {
  if (name == "w3") {
    if (k != 3) throw std::invalid_argument("w3 lives on k = 3");
    return build_w3(n);
  }
  if (name == "fk") {
    if (k != 3 || n != 2) throw std::invalid_argument("fk is fixed to k = 3, n = 2");
    return build_fk();
  }
  if (name == "what") return build_w_hat(k, n);
  if (name == "wprime") return build_w_prime(k, n);
  if (name == "wtilde") return build_w_tilde(k, n);
  throw std::invalid_argument("unknown weight family '" + std::string(name) + "'");
}

}  // namespace mwgap
