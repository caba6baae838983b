#include "mwgap/dual.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace mwgap {

namespace {

std::vector<std::array<int, 3>> bases_with_sum(int sum) {
  std::vector<std::array<int, 3>> out;
  if (sum < 0) return out;
  for (int a = 0; a <= sum; ++a) {
    for (int b = 0; a + b <= sum; ++b) out.push_back({a, b, sum - a - b});
  }
  return out;
}

Rational ceil_of(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(c);
}

template <class W>
ShortestPathTree<W> dijkstra(const DualGraph& g, std::span<const W> weights, int source) {
  const auto nodes = static_cast<std::size_t>(g.node_count());
  ShortestPathTree<W> tree;
  tree.source = source;
  tree.dist.assign(nodes, W(0));
  tree.pred_edge.assign(nodes, -1);
  tree.reached.assign(nodes, false);
  std::vector<bool> done(nodes, false);

  using Item = std::pair<W, int>;
  auto later = [](const Item& x, const Item& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second > y.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
  tree.reached[static_cast<std::size_t>(source)] = true;
  queue.emplace(W(0), source);
  while (!queue.empty()) {
    auto [d, node] = queue.top();
    queue.pop();
    const auto u = static_cast<std::size_t>(node);
    if (done[u]) continue;
    done[u] = true;
    if (node != source && g.is_outer(node)) continue;  // outer nodes end paths
    for (int e : g.incident(node)) {
      const int other = g.other_end(e, node);
      const auto v = static_cast<std::size_t>(other);
      if (done[v]) continue;
      W candidate = d + weights[static_cast<std::size_t>(e)];
      if (!tree.reached[v] || candidate < tree.dist[v]) {
        tree.reached[v] = true;
        tree.dist[v] = candidate;
        tree.pred_edge[v] = e;
        queue.emplace(tree.dist[v], other);
      }
    }
  }
  return tree;
}

}  // namespace

DualGraph::DualGraph(int n, const WeightFunction& w) : n_(n), grid_(3, n) {
  if (w.k() != 3) throw std::invalid_argument("the dual graph is defined for k = 3 only");
  if (w.n() != n) throw std::invalid_argument("weights live on a different grid");

  auto add_face = [&](bool up, const std::array<int, 3>& base) {
    Face f;
    f.up = up;
    f.base = base;
    for (int j = 0; j < 3; ++j) {
      std::array<int, 3> v = base;
      if (up) {
        v[j] += 1;
      } else {
        for (int t = 0; t < 3; ++t) v[t] += (t == j ? 0 : 1);
      }
      f.vertices[j] = grid_.rank(GridPoint({v[0], v[1], v[2]}));
      f.centroid[j] = 3 * base[j] + (up ? 1 : 2);
    }
    faces_.push_back(f);
  };
  for (const auto& b : bases_with_sum(n - 1)) add_face(true, b);
  for (const auto& b : bases_with_sum(n - 2)) add_face(false, b);

  std::vector<std::vector<int>> faces_of_edge(grid_.edges().size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& vs = faces_[f].vertices;
    for (auto [x, y] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      const auto e = grid_.edge_index(vs[x], vs[y]);
      if (e < 0) throw std::logic_error("face side is not a grid edge");
      faces_of_edge[static_cast<std::size_t>(e)].push_back(static_cast<int>(f));
    }
  }

  adjacency_.resize(static_cast<std::size_t>(node_count()));
  primal_to_dual_.assign(grid_.edges().size(), -1);
  for (std::size_t e = 0; e < grid_.edges().size(); ++e) {
    const auto& owners = faces_of_edge[e];
    DualEdge d;
    d.primal = e;
    d.weight = w.at(grid_.edges()[e]);
    if (owners.size() == 2) {
      d.a = std::min(owners[0], owners[1]);
      d.b = std::max(owners[0], owners[1]);
    } else if (owners.size() == 1) {
      // A side edge with x_c = 0 borders the outer face opposite e^c.
      const auto [i, j] = grid_.edges()[e].moved();
      const int c = 3 - i - j;
      d.a = owners[0];
      d.b = outer(c + 1);
    } else {
      throw std::logic_error("grid edge with no incident face");
    }
    const int id = static_cast<int>(edges_.size());
    adjacency_[static_cast<std::size_t>(d.a)].push_back(id);
    adjacency_[static_cast<std::size_t>(d.b)].push_back(id);
    primal_to_dual_[e] = id;
    edges_.push_back(std::move(d));
  }
}

DualGraph build_dual(int n, const WeightFunction& w) { return DualGraph(n, w); }

ShortestPathTree<Rational> shortest_paths(const DualGraph& g, int source) {
  std::vector<Rational> weights;
  weights.reserve(g.edges().size());
  for (const auto& e : g.edges()) weights.push_back(e.weight);
  return dijkstra<Rational>(g, weights, source);
}

ShortestPathTree<double> shortest_paths(const DualGraph& g, std::span<const double> weights, int source) {
  if (weights.size() != g.edges().size()) throw std::invalid_argument("one weight per dual edge expected");
  return dijkstra<double>(g, weights, source);
}

Rational dual_distance(const DualGraph& g, int s, int t) {
  const auto tree = shortest_paths(g, s);
  return tree.dist[static_cast<std::size_t>(t)];
}

Rational potential(int i, const Point3& x, int n) {
  if (i < 1 || i > 3) throw std::invalid_argument("potential index must be in [1, 3]");
  const Rational rho = frac(1, 2 * n);
  const Rational two_thirds = frac(2, 3);
  const int a = i - 1;
  if (x[a] >= two_thirds) return frac(4 * n, 3) * rho;
  for (int j = 0; j < 3; ++j) {
    if (j == a || x[j] < two_thirds) continue;
    const int other = 3 - a - j;
    return (frac(n, 3) + n * (x[a] - x[other])) * rho;
  }
  return ceil_of(2 * n * x[a]) * rho;
}

Point3 centroid_point(const DualGraph& g, int face) {
  const auto& c = g.faces()[static_cast<std::size_t>(face)].centroid;
  const int den = 3 * g.n();
  return {frac(c[0], den), frac(c[1], den), frac(c[2], den)};
}

Rational potential(int i, const DualGraph& g, int node) {
  if (g.is_outer(node)) {
    if (node != g.outer(i)) throw std::invalid_argument("Φ_i is undefined on outer nodes other than O_i");
    return 0;
  }
  return potential(i, centroid_point(g, node), g.n());
}

Certificate certify(int n, const WeightFunction& w, Family family, const Rational& target) {
  const DualGraph g(n, w);
  std::array<ShortestPathTree<Rational>, 3> trees{shortest_paths(g, g.outer(1)), shortest_paths(g, g.outer(2)),
                                                  shortest_paths(g, g.outer(3))};
  Certificate cert;
  cert.family = family;
  cert.target = target;
  cert.pairwise = {trees[0].dist[static_cast<std::size_t>(g.outer(2))],
                   trees[0].dist[static_cast<std::size_t>(g.outer(3))],
                   trees[1].dist[static_cast<std::size_t>(g.outer(3))]};

  for (int f = 0; f < g.face_count(); ++f) {
    const auto u = static_cast<std::size_t>(f);
    Rational sum = trees[0].dist[u] + trees[1].dist[u] + trees[2].dist[u];
    if (cert.witness_face < 0 || sum < cert.ball) {
      cert.ball = sum;
      cert.witness_face = f;
    }
  }
  const auto& witness = g.faces()[static_cast<std::size_t>(cert.witness_face)];
  for (int j = 0; j < 3; ++j) {
    const auto& p = g.grid().points()[witness.vertices[static_cast<std::size_t>(j)]];
    cert.witness_vertices[static_cast<std::size_t>(j)] = {p[0], p[1], p[2]};
  }
  for (int i = 0; i < 3; ++i) {
    auto path = tree_path(g, trees[static_cast<std::size_t>(i)], cert.witness_face);
    std::reverse(path.begin(), path.end());
    cert.witness_paths[static_cast<std::size_t>(i)] = std::move(path);
  }

  std::array<Rational, 3> sorted = cert.pairwise;
  std::sort(sorted.begin(), sorted.end());
  cert.corner = sorted[0] + sorted[1] + sorted[2];
  cert.two_corner = sorted[0] + sorted[1];
  const Rational& other = family == Family::nonopposite ? cert.corner : cert.two_corner;
  cert.overall = std::min(cert.ball, other);
  cert.pass = cert.overall >= target;
  return cert;
}

PotentialReport check_potentials(int n, const WeightFunction& w) {
  const DualGraph g(n, w);
  PotentialReport report;
  auto fail = [&](std::string check, int i, int a, int b, Rational lhs, Rational rhs, std::string message) {
    report.ok = false;
    report.check = std::move(check);
    report.index = i;
    report.node_a = a;
    report.node_b = b;
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    report.message = std::move(message);
    return report;
  };

  const Rational margin = frac(1, 3);  // (2n/3)·ρ
  for (int i = 1; i <= 3; ++i) {
    for (const auto& e : g.edges()) {
      const bool a_outer = g.is_outer(e.a);
      const bool b_outer = g.is_outer(e.b);
      if (!a_outer && !b_outer) {
        Rational gap = abs(potential(i, g, e.a) - potential(i, g, e.b));
        ++report.checked;
        if (gap > e.weight) return fail("lipschitz", i, e.a, e.b, gap, e.weight, "|Φ difference| exceeds edge weight");
        continue;
      }
      const int face = a_outer ? e.b : e.a;
      const int outer_node = a_outer ? e.a : e.b;
      Rational phi = potential(i, g, face);
      ++report.checked;
      if (outer_node == g.outer(i)) {
        if (phi > e.weight) return fail("lipschitz", i, face, outer_node, phi, e.weight, "Φ_i exceeds edge weight to O_i");
      } else if (phi + e.weight < margin) {
        return fail("case1", i, face, outer_node, phi + e.weight, margin, "Φ_i + weight below 1/3 next to O_j");
      }
    }
  }
  for (int f = 0; f < g.face_count(); ++f) {
    Rational sum = potential(1, g, f) + potential(2, g, f) + potential(3, g, f);
    ++report.checked;
    if (sum < 1) return fail("case2", 0, f, -1, sum, Rational(1), "Φ_1 + Φ_2 + Φ_3 below 1");
  }
  return report;
}

std::string family_name(Family f) { return f == Family::nonopposite ? "nonopposite" : "threeway"; }

Family parse_family(std::string_view name) {
  if (name == "nonopposite") return Family::nonopposite;
  if (name == "threeway") return Family::threeway;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

}  // namespace mwgap
