#include "mwgap/rounding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace mwgap {

namespace {

template <class S>
struct P2 {
  S x;
  S y;
};

template <class S>
int sign_of(const S& v) {
  return (v > 0) - (v < 0);
}

template <class S>
int orient(const P2<S>& a, const P2<S>& b, const P2<S>& c) {
  const S lhs = (b.x - a.x) * (c.y - a.y);
  const S rhs = (b.y - a.y) * (c.x - a.x);
  return sign_of<S>(lhs - rhs);
}

template <class S>
bool within(const P2<S>& a, const P2<S>& b, const P2<S>& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

/// Closed segments [p1, p2] and [q1, q2] share at least one point.
template <class S>
bool segments_meet(const P2<S>& p1, const P2<S>& p2, const P2<S>& q1, const P2<S>& q2) {
  const int d1 = orient(p1, p2, q1);
  const int d2 = orient(p1, p2, q2);
  const int d3 = orient(q1, q2, p1);
  const int d4 = orient(q1, q2, p2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && within(p1, p2, q1)) return true;
  if (d2 == 0 && within(p1, p2, q2)) return true;
  if (d3 == 0 && within(q1, q2, p1)) return true;
  if (d4 == 0 && within(q1, q2, p2)) return true;
  return false;
}

int line_for_side(int side, bool higher) {
  int lo = -1;
  int hi = -1;
  for (int a = 0; a < 3; ++a) {
    if (a == side) continue;
    (lo < 0 ? lo : hi) = a;
  }
  return higher ? hi : lo;
}

/// Ball geometry in homogeneous coordinates summing to `total`, projected
/// onto the first two coordinates.
template <class S>
class BallGeometry {
 public:
  BallGeometry(const std::array<S, 3>& center, const S& total, const std::array<bool, 3>& side_choice) {
    center_ = {center[0], center[1]};
    for (int s = 0; s < 3; ++s) {
      const int a = line_for_side(s, side_choice[static_cast<std::size_t>(s)]);
      std::array<S, 3> end{};
      end[static_cast<std::size_t>(a)] = center[static_cast<std::size_t>(a)];
      end[static_cast<std::size_t>(s)] = S(0);
      end[static_cast<std::size_t>(3 - a - s)] = total - center[static_cast<std::size_t>(a)];
      ends_[static_cast<std::size_t>(s)] = {end[0], end[1]};
    }
    corners_[0] = {total, S(0)};
    corners_[1] = {S(0), total};
    corners_[2] = {S(0), S(0)};
  }

  int locate(const std::array<S, 3>& x) const {
    const P2<S> p{x[0], x[1]};
    int found = 0;
    int count = 0;
    for (int i = 0; i < 3; ++i) {
      bool clear = true;
      for (int s = 0; s < 3 && clear; ++s) {
        if (segments_meet(p, corners_[static_cast<std::size_t>(i)], center_, ends_[static_cast<std::size_t>(s)])) {
          clear = false;
        }
      }
      if (clear) {
        found = i + 1;
        ++count;
      }
    }
    if (count != 1) throw DegenerateError("point lies on a ball segment");
    return found;
  }

 private:
  P2<S> center_;
  std::array<P2<S>, 3> ends_;
  std::array<P2<S>, 3> corners_;
};

void check_interior_center(const Point3& c) {
  if (c[0] + c[1] + c[2] != 1) throw std::invalid_argument("ball center must lie on Δ_3");
  for (const auto& v : c) {
    if (sgn(v) <= 0) throw std::invalid_argument("ball center must be interior");
  }
}

void check_point(const Point3& x) {
  if (x[0] + x[1] + x[2] != 1) throw std::invalid_argument("point must lie on Δ_3");
  for (const auto& v : x) {
    if (sgn(v) < 0) throw std::invalid_argument("point must have nonnegative coordinates");
  }
}

int corner_label(const Point3& x, const Rational& r) {
  int label = 4;
  for (int i = 0; i < 3; ++i) {
    if (x[static_cast<std::size_t>(i)] > r) {
      if (label != 4) throw std::logic_error("two coordinates exceed a corner threshold");
      label = i + 1;
    }
  }
  return label;
}

using i128 = __int128;

bool fits_int64(const mpz_class& z) { return z.fits_slong_p(); }

}  // namespace

Point3 diagonal_point(int diag, const Rational& t) {
  if (diag != 0 && diag != 1) throw std::invalid_argument("diagonal must be 0 or 1");
  const Rational two_thirds = frac(2, 3);
  const Rational third = frac(1, 3);
  Point3 start = diag == 0 ? Point3{two_thirds, third, Rational(0)} : Point3{two_thirds, Rational(0), third};
  Point3 end = diag == 0 ? Point3{Rational(0), two_thirds, third} : Point3{Rational(0), third, two_thirds};
  Point3 out;
  for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = start[i] + t * (end[i] - start[i]);
  return out;
}

BallCut make_ball_cut(int diag, const Rational& t, std::array<bool, 3> side_choice) {
  BallCut cut;
  cut.center = diagonal_point(diag, t);
  cut.diag = diag;
  cut.t = t;
  cut.side_choice = side_choice;
  return cut;
}

SampledCut sample_cut(Rng& rng, const Rational& p_corner) {
  if (sgn(p_corner) < 0 || p_corner > 1) throw std::invalid_argument("p_corner must lie in [0, 1]");
  const auto d = static_cast<long>(kRoundingResolution);
  if (bernoulli(rng, p_corner)) {
    const auto u = static_cast<long>(uniform_below(rng, kRoundingResolution));
    Rational r(2 * d + u, 3 * d);
    r.canonicalize();
    return CornerCut{r};
  }
  const int diag = coin(rng) ? 1 : 0;
  const auto t = 1 + static_cast<long>(uniform_below(rng, kRoundingResolution - 1));
  std::array<bool, 3> sides{};
  for (auto& s : sides) s = coin(rng);
  return make_ball_cut(diag, frac(t, d), sides);
}

bool is_corner(const SampledCut& cut) { return std::holds_alternative<CornerCut>(cut); }

int evaluate(const SampledCut& cut, const Point3& x) {
  check_point(x);
  if (const auto* c = std::get_if<CornerCut>(&cut)) return corner_label(x, c->threshold);
  const auto& ball = std::get<BallCut>(cut);
  check_interior_center(ball.center);
  const BallGeometry<Rational> geometry(ball.center, Rational(1), ball.side_choice);
  return geometry.locate(x);
}

GridLabeler::GridLabeler(int n) : n_(n) {
  for (const auto& p : enumerate_points(3, n)) points_.push_back({p[0], p[1], p[2]});
}

std::vector<int> GridLabeler::labels(const SampledCut& cut) const {
  std::vector<int> out;
  out.reserve(points_.size());

  if (const auto* c = std::get_if<CornerCut>(&cut)) {
    const mpz_class& num = c->threshold.get_num();
    const mpz_class& den = c->threshold.get_den();
    if (fits_int64(num) && fits_int64(den)) {
      const i128 rhs = static_cast<i128>(num.get_si()) * n_;
      const i128 q = den.get_si();
      for (const auto& p : points_) {
        int label = 4;
        for (int i = 0; i < 3; ++i) {
          if (static_cast<i128>(p[static_cast<std::size_t>(i)]) * q > rhs) label = i + 1;
        }
        out.push_back(label);
      }
      return out;
    }
    for (const auto& p : points_) out.push_back(corner_label({frac(p[0], n_), frac(p[1], n_), frac(p[2], n_)}, c->threshold));
    return out;
  }

  const auto& ball = std::get<BallCut>(cut);
  check_interior_center(ball.center);
  mpz_class common = 1;
  for (const auto& v : ball.center) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
  const mpz_class scale = common * n_;
  const bool narrow = mpz_sizeinbase(scale.get_mpz_t(), 2) <= 61;
  if (narrow) {
    std::array<i128, 3> center{};
    for (int i = 0; i < 3; ++i) {
      const mpz_class numerator = ball.center[static_cast<std::size_t>(i)].get_num() * (common / ball.center[i].get_den());
      center[static_cast<std::size_t>(i)] = static_cast<i128>(numerator.get_si()) * n_;
    }
    const i128 total = scale.get_si();
    const i128 l = common.get_si();
    const BallGeometry<i128> geometry(center, total, ball.side_choice);
    for (const auto& p : points_) out.push_back(geometry.locate({p[0] * l, p[1] * l, p[2] * l}));
    return out;
  }
  const BallGeometry<Rational> geometry(ball.center, Rational(1), ball.side_choice);
  for (const auto& p : points_) out.push_back(geometry.locate({frac(p[0], n_), frac(p[1], n_), frac(p[2], n_)}));
  return out;
}

Cut GridLabeler::to_cut(const SampledCut& cut) const { return Cut(3, n_, CutFamily::nonopposite, labels(cut)); }

DensityEstimate estimate_density(int n, std::uint64_t samples, const Rational& p_corner, std::uint64_t seed,
                                 int threads) {
  if (n < 2) throw std::invalid_argument("density estimation needs n >= 2");
  if (samples < 1000) throw std::invalid_argument("density estimation needs at least 1000 samples");
  if (sgn(p_corner) < 0 || p_corner > 1) throw std::invalid_argument("p_corner must lie in [0, 1]");

  const SimplexGrid grid(3, n);
  const GridLabeler labeler(n);
  const std::size_t edge_count = grid.edges().size();

  struct StreamTally {
    std::vector<std::uint64_t> separations;
    std::uint64_t corners = 0;
    std::uint64_t resampled = 0;
  };
  std::vector<StreamTally> tallies(kDensityStreams);
  std::atomic<int> next{0};

  auto worker = [&]() {
    for (int s = next++; s < kDensityStreams; s = next++) {
      auto& tally = tallies[static_cast<std::size_t>(s)];
      tally.separations.assign(edge_count, 0);
      const std::uint64_t quota = samples / kDensityStreams + (static_cast<std::uint64_t>(s) < samples % kDensityStreams ? 1 : 0);
      Rng rng = stream_rng(seed, static_cast<std::uint64_t>(s));
      for (std::uint64_t i = 0; i < quota; ++i) {
        std::vector<int> labels;
        bool corner = false;
        for (;;) {
          const SampledCut cut = sample_cut(rng, p_corner);
          try {
            labels = labeler.labels(cut);
          } catch (const DegenerateError&) {
            ++tally.resampled;
            continue;
          }
          corner = is_corner(cut);
          break;
        }
        if (corner) ++tally.corners;
        for (std::size_t e = 0; e < edge_count; ++e) {
          const auto [a, b] = grid.endpoints(e);
          if (labels[a] != labels[b]) ++tally.separations[e];
        }
      }
    }
  };

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, kDensityStreams);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  DensityEstimate est;
  est.n = n;
  est.samples = samples;
  est.p_corner = p_corner;
  est.seed = seed;
  est.edges = grid.edges();
  est.separations.assign(edge_count, 0);
  for (const auto& tally : tallies) {
    for (std::size_t e = 0; e < edge_count; ++e) est.separations[e] += tally.separations[e];
    est.corner_samples += tally.corners;
    est.resampled += tally.resampled;
  }
  const auto s = static_cast<double>(samples);
  est.sigma.resize(edge_count);
  double worst_sigma = 0.0;
  for (std::size_t e = 0; e < edge_count; ++e) {
    const double p = static_cast<double>(est.separations[e]) / s;
    const double ratio = p * n;
    est.sigma[e] = n * std::sqrt(p * (1.0 - p) / s);
    worst_sigma = std::max(worst_sigma, est.sigma[e]);
    if (e == 0 || ratio > est.tau_hat) {
      est.tau_hat = ratio;
      est.worst_edge = e;
    }
  }
  est.ci3sigma = 3.0 * worst_sigma;
  est.corner_fraction = static_cast<double>(est.corner_samples) / s;
  return est;
}

}  // namespace mwgap
