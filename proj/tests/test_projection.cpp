#include "oracles.hpp"

#include "mwgap/projection.hpp"
#include "mwgap/random.hpp"

#include <doctest.h>

using namespace mwgap;

namespace {

// Fraction of triples whose restriction has no point labeled by the
// triple's third terminal, counted straight from the k-way labels.
Rational direct_fraction(const Cut& cut) {
  const int k = cut.k();
  long good = 0;
  long total = 0;
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      for (int c = b + 1; c <= k; ++c) {
        ++total;
        bool ok = true;
        for (const auto& p : enumerate_points(k, cut.n())) {
          const auto s = p.support();
          if (s.size() != 2) continue;
          const std::set<int> tri{a, b, c};
          if (!tri.count(s[0]) || !tri.count(s[1])) continue;
          const int l = cut.label(p);
          if (tri.count(l) && l != s[0] && l != s[1]) ok = false;
        }
        if (ok) ++good;
      }
    }
  }
  return frac(good, total);
}

}  // namespace

TEST_SUITE("projection") {
  TEST_CASE("identity restriction") {
    const Cut c = argmax_cut(3, 4);
    const RestrictionResult r = restrict_triple(c, {1, 2, 3});
    CHECK(r.bad_points.empty());
    CHECK(std::equal(r.raw.labels().begin(), r.raw.labels().end(), c.labels().begin(), c.labels().end()));
  }

  TEST_CASE("argmax restrictions are clean") {
    for (int k = 3; k <= 6; ++k) {
      const Cut c = argmax_cut(k, 3);
      for (const std::array<int, 3> t : {std::array{1, 2, 3}, std::array{1, 3, k}, std::array{2, k - 1, k}}) {
        if (t[0] >= t[1] || t[1] >= t[2]) continue;
        const RestrictionResult r = restrict_triple(c, t);
        CHECK(r.bad_points.empty());
        CHECK(is_non_opposite(r.fixed));
      }
    }
  }

  TEST_CASE("foreign cluster maps to 4") {
    const GridPoint x({1, 1, 1, 0, 0});
    const Cut c = Cut::from_function(5, 3, CutFamily::kway, [&](const GridPoint& p) {
      if (p == x) return 5;
      return argmax_cut(5, 3).label(p);
    });
    const RestrictionResult r = restrict_triple(c, {1, 2, 3});
    CHECK(r.raw.label(GridPoint({1, 1, 1})) == 4);
  }

  TEST_CASE("bad points go to 4") {
    // (1,1,0) labeled 3 is opposite on face (1,2,3)
    const Cut c = Cut::from_function(3, 2, CutFamily::kway,
                                     [](const GridPoint& p) { return p == GridPoint({1, 1, 0}) ? 3 : argmax_cut(3, 2).label(p); });
    const RestrictionResult r = restrict_triple(c, {1, 2, 3});
    REQUIRE(r.bad_points.size() == 1);
    CHECK(r.bad_points[0] == GridPoint({1, 1, 0}));
    CHECK(r.fixed.label(GridPoint({1, 1, 0})) == 4);
    CHECK(is_non_opposite(r.fixed));
  }

  TEST_CASE("invalid triples") {
    const Cut c = argmax_cut(4, 3);
    CHECK_THROWS(restrict_triple(c, {1, 1, 2}));
    CHECK_THROWS(restrict_triple(c, {1, 2, 5}));
  }

  TEST_CASE("identity injection preserves labels") {
    const Cut c = argmax_cut(4, 3);
    const Cut r = restrict_injection(c, {1, 2, 3, 4});
    CHECK(std::equal(r.labels().begin(), r.labels().end(), c.labels().begin(), c.labels().end()));
    for (int l : r.labels()) CHECK(l != 5);
  }

  TEST_CASE("random injections give non-opposite cuts") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const Cut big = random_kway_cut(8, 3, rng);
      std::vector<int> f{1, 2, 3, 4, 5, 6, 7, 8};
      for (std::size_t i = f.size() - 1; i > 0; --i) std::swap(f[i], f[uniform_below(rng, i + 1)]);
      f.resize(3);
      const Cut r = restrict_injection(big, f);
      CHECK(is_non_opposite(r));
      for (const auto& p : enumerate_points(3, 3)) {
        if (is_bad_under_injection(big, f, p)) CHECK(r.label(p) == 4);
      }
    }
  }

  TEST_CASE("D profile") {
    const DProfile a = d_profile(argmax_cut(5, 3));
    CHECK(a.mean == 2);
    for (const auto& [pair, labels] : a.per_pair) CHECK(labels.size() == 2);
    CHECK(a.per_pair.size() == 10);

    const Cut c = Cut::from_function(3, 3, CutFamily::kway, [](const GridPoint& p) {
      if (p == GridPoint({2, 1, 0}) || p == GridPoint({1, 2, 0})) return 3;
      return argmax_cut(3, 3).label(p);
    });
    CHECK(d_profile(c).mean == frac(7, 3));
  }

  TEST_CASE("argmax projection report") {
    const ProjectionReport r = check_projection_bounds(argmax_cut(6, 3));
    CHECK(r.fraction == 1);
    CHECK(r.refined_bound == 1);
    CHECK(r.exhaustive);
    CHECK(r.ok);
  }

  TEST_CASE("projection fraction agrees with direct count") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      const Cut c = random_kway_cut(6, 3, rng);
      const ProjectionReport r = check_projection_bounds(c);
      CHECK(r.triples == 20);
      CHECK(r.fraction == direct_fraction(c));
      CHECK(r.fraction >= r.refined_bound);
      CHECK(r.fraction >= r.coarse_bound);
      const Rational d = d_profile(c).mean;
      Rational expect = 1 - 3 * (d - 2) / 4;
      if (expect < 0) expect = 0;
      CHECK(r.refined_bound == expect);
    }
  }

  TEST_CASE("cost lemmas on random cuts") {
    Rng rng(31);
    const CostLemmaChecker checker(5, 3);
    for (int trial = 0; trial < 300; ++trial) {
      const Cut c = random_kway_cut(5, 3, rng);
      const CostLemmaReport r = checker.check(c);
      CHECK(r.ok());
      CHECK(r.d_mean == d_profile(c).mean);
      CHECK(r.prime_bound == r.d_mean - 1);
    }
  }

  TEST_CASE("checker matches the one-shot form") {
    Rng rng(2);
    const Cut c = random_kway_cut(4, 3, rng);
    const CostLemmaReport a = CostLemmaChecker(4, 3).check(c);
    const CostLemmaReport b = check_cost_lemmas(c, 3);
    CHECK(a.cost_hat == b.cost_hat);
    CHECK(a.cost_tilde == b.cost_tilde);
  }
}
