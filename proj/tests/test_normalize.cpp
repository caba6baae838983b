#include "mwgap/normalize.hpp"
#include "mwgap/random.hpp"
#include "mwgap/weights.hpp"

#include <doctest.h>

using namespace mwgap;

TEST_SUITE("normalize") {
  TEST_CASE("argmax cut is a ball and a fixpoint") {
    for (int n : {3, 6}) {
      const Cut c = argmax_cut(3, n);
      const Cut as_nonop(3, n, CutFamily::nonopposite, {c.labels().begin(), c.labels().end()});
      CHECK(classify_shape(as_nonop) == CutShape::ball);
      CHECK(normalize_cut(as_nonop) == as_nonop);
    }
  }

  TEST_CASE("three-corner shape") {
    const Cut c = Cut::from_function(3, 3, CutFamily::nonopposite,
                                     [](const GridPoint& p) { return p.is_terminal() ? p.support()[0] : 4; });
    CHECK(classify_shape(c) == CutShape::three_corner);
    CHECK(normalize_cut(c) == c);
  }

  TEST_CASE("isolated interior 4 is absorbed") {
    const Cut base = argmax_cut(3, 3);
    std::vector<int> labels(base.labels().begin(), base.labels().end());
    labels[lex_rank(GridPoint({1, 1, 1}))] = 4;
    const Cut c(3, 3, CutFamily::nonopposite, labels);
    CHECK(classify_shape(c) == CutShape::other);
    const Cut out = normalize_cut(c);
    CHECK(classify_shape(out) == CutShape::ball);
    CHECK(out.label(GridPoint({1, 1, 1})) != 4);
  }

  TEST_CASE("uncut components") {
    const SimplexGrid g(3, 3);
    const Cut c = argmax_cut(3, 3);
    const UncutComponents u = uncut_components(g, c.labels());
    CHECK(u.members.size() == 3);
    for (std::size_t r = 0; r < g.size(); ++r) {
      CHECK(u.component_of[r] >= 0);
      CHECK(u.component_of[r] < 3);
    }
  }

  TEST_CASE("random cuts normalize without cutting new edges") {
    Rng rng(99);
    for (int n : {3, 6}) {
      const SimplexGrid g(3, n);
      const WeightFunction w = build_w3(n);
      for (int trial = 0; trial < 200; ++trial) {
        const Cut in = random_nonopposite_cut(n, rng);
        const Cut out = normalize_cut(in);
        CHECK(is_non_opposite(out));
        const CutShape s = classify_shape(out);
        CHECK((s == CutShape::ball || s == CutShape::three_corner));
        CHECK(cost(out, w) <= cost(in, w));
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
          const auto [a, b] = g.endpoints(e);
          if (in.label_at(a) == in.label_at(b)) CHECK(out.label_at(a) == out.label_at(b));
        }
      }
    }
  }
}
