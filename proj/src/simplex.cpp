#include "mwgap/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mwgap {

namespace {

void check_dims(int k, int n) {
  if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
  if (n < 1) throw std::invalid_argument("n must be at least 1, got " + std::to_string(n));
}

std::string describe(const GridPoint& p) {
  std::string s = "(";
  for (int i = 0; i < p.k(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace

// GridPoint ------------------------------------------------------------------

GridPoint::GridPoint(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("grid point needs at least 2 coordinates");
  int sum = 0;
  for (int c : coords_) {
    if (c < 0) throw std::invalid_argument("negative grid coordinate in " + describe(*this));
    sum += c;
  }
  if (sum < 1) throw std::invalid_argument("grid point coordinates must sum to n >= 1");
}

GridPoint GridPoint::terminal(int k, int n, int i) {
  check_dims(k, n);
  if (i < 1 || i > k) throw std::invalid_argument("terminal index out of range");
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  c[static_cast<std::size_t>(i - 1)] = n;
  return GridPoint(std::move(c));
}

int GridPoint::n() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

std::vector<int> GridPoint::support() const {
  std::vector<int> s;
  for (int i = 0; i < k(); ++i) {
    if (coords_[i] > 0) s.push_back(i + 1);
  }
  return s;
}

int GridPoint::support_size() const {
  return static_cast<int>(std::count_if(coords_.begin(), coords_.end(), [](int c) { return c > 0; }));
}

// Edge -----------------------------------------------------------------------

Edge::Edge(GridPoint a, GridPoint b) {
  if (a.k() != b.k() || a.n() != b.n()) {
    throw std::invalid_argument("edge endpoints live on different grids");
  }
  int plus = 0;
  int minus = 0;
  for (int i = 0; i < a.k(); ++i) {
    const int d = a[i] - b[i];
    if (d == 1) {
      ++plus;
    } else if (d == -1) {
      ++minus;
    } else if (d != 0) {
      plus = minus = -1;
      break;
    }
  }
  if (plus != 1 || minus != 1) {
    throw std::invalid_argument("not a unit-transfer edge: " + describe(a) + " - " + describe(b));
  }
  if (b < a) std::swap(a, b);
  u_ = std::move(a);
  v_ = std::move(b);
}

std::pair<int, int> Edge::moved() const {
  int first = -1;
  int second = -1;
  for (int i = 0; i < k(); ++i) {
    if (u_[i] != v_[i]) (first < 0 ? first : second) = i;
  }
  return {first, second};
}

int Edge::union_support_size() const {
  int s = 0;
  for (int i = 0; i < k(); ++i) {
    if (u_[i] > 0 || v_[i] > 0) ++s;
  }
  return s;
}

// Enumeration ----------------------------------------------------------------

std::uint64_t composition_count(int parts, int total) {
  if (parts <= 0) return total == 0 ? 1 : 0;
  if (total < 0) return 0;
  // C(total + parts - 1, parts - 1), multiplicative form stays exact.
  const std::uint64_t top = static_cast<std::uint64_t>(total + parts - 1);
  std::uint64_t r = std::min<std::uint64_t>(static_cast<std::uint64_t>(parts - 1), top - (parts - 1));
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) result = result * (top - r + i) / i;
  return result;
}

std::size_t lex_rank(const GridPoint& p) {
  const int k = p.k();
  int remaining = p.n();
  std::size_t rank = 0;
  for (int i = 0; i + 1 < k; ++i) {
    const int parts_after = k - i - 1;
    for (int v = 0; v < p[i]; ++v) rank += composition_count(parts_after, remaining - v);
    remaining -= p[i];
  }
  return rank;
}

std::vector<GridPoint> enumerate_points(int k, int n) {
  check_dims(k, n);
  std::vector<GridPoint> out;
  out.reserve(composition_count(k, n));
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  // Odometer over the first k-1 coordinates; the last one absorbs the rest.
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == k - 1) {
      c[i] = remaining;
      out.emplace_back(c);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  rec(0, n);
  return out;
}

std::vector<Edge> enumerate_edges(int k, int n) {
  const auto points = enumerate_points(k, n);
  std::vector<Edge> edges;
  for (const auto& p : points) {
    for (int a = 0; a < k; ++a) {
      if (p[a] == 0) continue;
      for (int b = 0; b < k; ++b) {
        if (b == a) continue;
        std::vector<int> q(p.coords().begin(), p.coords().end());
        --q[a];
        ++q[b];
        GridPoint other(std::move(q));
        if (p < other) edges.emplace_back(p, std::move(other));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// SimplexGrid ----------------------------------------------------------------

SimplexGrid::SimplexGrid(int k, int n)
    : k_(k), n_(n), points_(enumerate_points(k, n)), edges_(enumerate_edges(k, n)) {
  incident_.resize(points_.size());
  endpoint_ranks_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const std::size_t a = lex_rank(edges_[e].u());
    const std::size_t b = lex_rank(edges_[e].v());
    endpoint_ranks_.emplace_back(a, b);
    incident_[a].push_back(e);
    incident_[b].push_back(e);
    edge_lookup_.emplace((static_cast<std::uint64_t>(a) << 32) | b, e);
  }
}

std::size_t SimplexGrid::rank(const GridPoint& p) const {
  if (p.k() != k_ || p.n() != n_) throw std::invalid_argument("point " + describe(p) + " not on this grid");
  return lex_rank(p);
}

std::ptrdiff_t SimplexGrid::edge_index(std::size_t a, std::size_t b) const {
  if (b < a) std::swap(a, b);
  const auto it = edge_lookup_.find((static_cast<std::uint64_t>(a) << 32) | b);
  return it == edge_lookup_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

// WeightFunction -------------------------------------------------------------

WeightFunction::WeightFunction(int k, int n) : k_(k), n_(n) { check_dims(k, n); }

void WeightFunction::check_edge(const Edge& e) const {
  if (e.k() != k_ || e.n() != n_) {
    throw std::invalid_argument("edge " + describe(e.u()) + " - " + describe(e.v()) + " is not in E_{" +
                                std::to_string(k_) + "," + std::to_string(n_) + "}");
  }
}

Rational WeightFunction::at(const Edge& e) const {
  check_edge(e);
  const auto it = weights_.find(e);
  return it == weights_.end() ? Rational(0) : it->second;
}

void WeightFunction::set(const Edge& e, const Rational& w) {
  check_edge(e);
  if (sgn(w) < 0) throw std::invalid_argument("negative weight " + to_string(w));
  if (sgn(w) == 0) {
    weights_.erase(e);
  } else {
    weights_[e] = w;
  }
}

void WeightFunction::add(const Edge& e, const Rational& w) { set(e, at(e) + w); }

Rational WeightFunction::total() const {
  Rational sum = 0;
  for (const auto& [e, w] : weights_) sum += w;
  return sum;
}

WeightFunction WeightFunction::scaled(const Rational& factor) const {
  if (sgn(factor) < 0) throw std::invalid_argument("negative scale factor");
  WeightFunction out(k_, n_);
  if (sgn(factor) == 0) return out;
  for (const auto& [e, w] : weights_) out.weights_.emplace_hint(out.weights_.end(), e, w * factor);
  return out;
}

WeightFunction linear_combination(const Rational& a, const WeightFunction& w1, const Rational& b,
                                  const WeightFunction& w2) {
  if (w1.k() != w2.k() || w1.n() != w2.n()) throw std::invalid_argument("weight functions on different grids");
  WeightFunction out = w1.scaled(a);
  if (sgn(b) < 0) throw std::invalid_argument("negative scale factor");
  for (const auto& [e, w] : w2.entries()) out.add(e, w * b);
  return out;
}

// Cut ------------------------------------------------------------------------

Cut::Cut(int k, int n, CutFamily family, std::vector<int> labels)
    : k_(k), n_(n), family_(family), labels_(std::move(labels)) {
  check_dims(k, n);
  if (labels_.size() != composition_count(k, n)) {
    throw std::invalid_argument("cut needs one label per grid point");
  }
  const int max_label = family == CutFamily::kway ? k : k + 1;
  for (int l : labels_) {
    if (l < 1 || l > max_label) throw std::invalid_argument("cut label out of range: " + std::to_string(l));
  }
  for (int i = 1; i <= k; ++i) {
    if (labels_[lex_rank(GridPoint::terminal(k, n, i))] != i) {
      throw std::invalid_argument("terminal " + std::to_string(i) + " must carry its own label");
    }
  }
  if (family == CutFamily::nonopposite && !is_non_opposite(*this)) {
    throw std::invalid_argument("labels violate the non-opposite constraint");
  }
}

Cut Cut::from_function(int k, int n, CutFamily family, const std::function<int(const GridPoint&)>& label_of) {
  const auto points = enumerate_points(k, n);
  std::vector<int> labels;
  labels.reserve(points.size());
  for (const auto& p : points) labels.push_back(label_of(p));
  return Cut(k, n, family, std::move(labels));
}

bool is_non_opposite(const Cut& cut) {
  const auto points = enumerate_points(cut.k(), cut.n());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const int l = cut.label_at(r);
    if (l != cut.k() + 1 && !points[r].supports(l)) return false;
  }
  return true;
}

Cut argmax_cut(int k, int n) {
  return Cut::from_function(k, n, CutFamily::kway, [](const GridPoint& p) {
    int best = 0;
    for (int i = 1; i < p.k(); ++i) {
      if (p[i] > p[best]) best = i;
    }
    return best + 1;
  });
}

// Functionals ----------------------------------------------------------------

Rational lpc(const WeightFunction& w) { return w.total() / Rational(w.n()); }

Rational cost(const Cut& cut, const WeightFunction& w) {
  if (cut.k() != w.k() || cut.n() != w.n()) throw std::invalid_argument("cut and weights on different grids");
  Rational sum = 0;
  for (const auto& [e, weight] : w.entries()) {
    if (cut.label(e.u()) != cut.label(e.v())) sum += weight;
  }
  return sum;
}

IndexedWeights::IndexedWeights(const SimplexGrid& grid, const WeightFunction& w) : k_(grid.k()), n_(grid.n()) {
  if (w.k() != k_ || w.n() != n_) throw std::invalid_argument("weights and grid disagree");
  for (const auto& [e, weight] : w.entries()) {
    ends_.emplace_back(grid.rank(e.u()), grid.rank(e.v()));
    weights_.push_back(weight);
  }
}

Rational IndexedWeights::cost(const Cut& cut) const {
  if (cut.k() != k_ || cut.n() != n_) throw std::invalid_argument("cut and weights on different grids");
  Rational sum = 0;
  for (std::size_t i = 0; i < ends_.size(); ++i) {
    if (cut.label_at(ends_[i].first) != cut.label_at(ends_[i].second)) sum += weights_[i];
  }
  return sum;
}

}  // namespace mwgap
