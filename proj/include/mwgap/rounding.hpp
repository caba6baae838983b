#pragma once

// Random non-opposite cuts of Δ_3: threshold (corner) cuts and ball cuts
// formed by three segments through a center point, plus a Monte-Carlo
// estimate of the maximum separation density on Δ_{3,n}.

#include "mwgap/dual.hpp"
#include "mwgap/random.hpp"
#include "mwgap/rational.hpp"
#include "mwgap/simplex.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

namespace mwgap {

/// Parameter resolution: thresholds and line positions are multiples of 1/D.
inline constexpr std::uint64_t kRoundingResolution = std::uint64_t{1} << 40;

/// x goes to i iff x_i > threshold, to 4 when no coordinate exceeds it.
struct CornerCut {
  Rational threshold;  // in [2/3, 1)
};

/// Three segments from `center`, each parallel to a side of Δ_3 and ending on
/// a different side. side_choice[s] picks the segment ending on side
/// {x_{s+1} = 0}: false takes the line x_a = center_a with the lower index a
/// among the other two coordinates, true the higher one.
struct BallCut {
  Point3 center;
  int diag = 0;    // 0: (2/3,1/3,0)-(0,2/3,1/3), 1: (2/3,0,1/3)-(0,1/3,2/3)
  Rational t;      // position on the diagonal; center = start + t·(end - start)
  std::array<bool, 3> side_choice{};
};

using SampledCut = std::variant<CornerCut, BallCut>;

/// A point lies on a chosen segment, or the region test is not unique.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Center of a ball cut at position t on diagonal `diag`.
Point3 diagonal_point(int diag, const Rational& t);
BallCut make_ball_cut(int diag, const Rational& t, std::array<bool, 3> side_choice);

/// Corner with probability p_corner (threshold uniform on a 1/(3D) grid of
/// [2/3, 1)); otherwise a ball cut with a fair-coin diagonal, t uniform on
/// the interior multiples of 1/D and three fair side coins.
SampledCut sample_cut(Rng& rng, const Rational& p_corner = frac(1, 5));

bool is_corner(const SampledCut& cut);

/// Exact label in [4] of a point of Δ_3. Ball centers must be interior.
/// Throws DegenerateError when x lies on a chosen ball segment.
int evaluate(const SampledCut& cut, const Point3& x);

/// Labels of every point of Δ_{3,n} (lexicographic rank order). Uses
/// 128-bit integer geometry when the common denominator allows it.
class GridLabeler {
 public:
  explicit GridLabeler(int n);
  int n() const { return n_; }
  std::vector<int> labels(const SampledCut& cut) const;
  Cut to_cut(const SampledCut& cut) const;

 private:
  int n_;
  std::vector<std::array<int, 3>> points_;
};

struct DensityEstimate {
  int n = 0;
  std::uint64_t samples = 0;
  Rational p_corner;
  std::uint64_t seed = 0;
  std::vector<Edge> edges;                 // E_{3,n}, canonical order
  std::vector<std::uint64_t> separations;  // per edge
  std::vector<double> sigma;               // per edge, density units
  double tau_hat = 0.0;                    // max_e p̂_e · n
  std::size_t worst_edge = 0;
  double ci3sigma = 0.0;  // 3 · max_e sigma_e
  std::uint64_t corner_samples = 0;
  double corner_fraction = 0.0;
  std::uint64_t resampled = 0;  // ball cuts redrawn after hitting a grid point
};

/// Number of independent rng streams the samples are split across.
inline constexpr int kDensityStreams = 64;

/// Monte-Carlo separation frequencies over E_{3,n}. Deterministic for a
/// given seed regardless of `threads`.
DensityEstimate estimate_density(int n, std::uint64_t samples, const Rational& p_corner, std::uint64_t seed,
                                 int threads = 0);

}  // namespace mwgap
