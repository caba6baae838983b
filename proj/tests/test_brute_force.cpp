#include "oracles.hpp"

#include "mwgap/brute_force.hpp"
#include "mwgap/dual.hpp"
#include "mwgap/random.hpp"
#include "mwgap/weights.hpp"

#include <doctest.h>

using namespace mwgap;

namespace {

WeightFunction random_weights(int n, Rng& rng) {
  WeightFunction w(3, n);
  for (const auto& e : enumerate_edges(3, n)) w.set(e, frac(static_cast<long>(uniform_below(rng, 6)), 5));
  return w;
}

}  // namespace

TEST_SUITE("brute_force") {
  TEST_CASE("known minima") {
    CHECK(brute_force_min_cut(2, build_fk(), Family::nonopposite).minimum == 1);
    CHECK(brute_force_min_cut(3, build_w3(3), Family::nonopposite).minimum >= 1);
    CHECK(brute_force_min_cut(3, build_w3(3), Family::threeway).minimum >= frac(2, 3));
    for (auto fam : {Family::nonopposite, Family::threeway}) {
      CHECK(brute_force_min_cut(3, WeightFunction(3, 3), fam).minimum == 0);
    }
  }

  TEST_CASE("argmin attains the minimum") {
    const WeightFunction w = build_w3(3);
    for (auto fam : {Family::nonopposite, Family::threeway}) {
      const BruteForceResult r = brute_force_min_cut(3, w, fam);
      CHECK(cost(r.argmin, w) == r.minimum);
      if (fam == Family::nonopposite) CHECK(is_non_opposite(r.argmin));
    }
  }

  TEST_CASE("pruned search agrees with full enumeration") {
    Rng rng(5);
    CHECK(brute_force_min_cut(2, build_fk(), Family::nonopposite).minimum ==
          oracle::exhaustive_min(2, build_fk(), Family::nonopposite));
    for (int trial = 0; trial < 4; ++trial) {
      const WeightFunction w = random_weights(3, rng);
      for (auto fam : {Family::nonopposite, Family::threeway}) {
        CHECK(brute_force_min_cut(3, w, fam).minimum == oracle::exhaustive_min(3, w, fam));
      }
    }
    CHECK(brute_force_min_cut(3, build_w3(3), Family::threeway).minimum ==
          oracle::exhaustive_min(3, build_w3(3), Family::threeway));
  }

  TEST_CASE("minimum dominates the certificate") {
    Rng rng(20240503);
    for (int trial = 0; trial < 10; ++trial) {
      const WeightFunction w = random_weights(3, rng);
      for (auto fam : {Family::nonopposite, Family::threeway}) {
        CHECK(brute_force_min_cut(3, w, fam).minimum >= certify(3, w, fam, 0).overall);
      }
    }
  }

  TEST_CASE("size limit") { CHECK_THROWS(brute_force_min_cut(kBruteForceMaxN + 1, WeightFunction(3, kBruteForceMaxN + 1), Family::nonopposite)); }
}
