#include "mwgap/dual.hpp"
#include "mwgap/svg.hpp"
#include "mwgap/weights.hpp"

#include <doctest.h>

using namespace mwgap;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++c;
  return c;
}

}  // namespace

TEST_SUITE("svg") {
  TEST_CASE("one line per edge, zero edges dashed") {
    const WeightFunction w = build_w3(9);
    const std::string s = emit_svg(w);
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(count(s, "<line") == enumerate_edges(3, 9).size());
    CHECK(count(s, "stroke-dasharray") == enumerate_edges(3, 9).size() - w.support_size());
    CHECK(s == emit_svg(w));
  }

  TEST_CASE("empty weights are all dashed") {
    const std::string s = emit_svg(WeightFunction(3, 4));
    CHECK(count(s, "stroke-dasharray") == 30);
  }

  TEST_CASE("potential labels") {
    const std::string s = emit_svg(build_w3(9), SvgOptions{std::nullopt, 1});
    CHECK(count(s, "<text") == 81);
    CHECK(s.find(">2/3<") != std::string::npos);
    CHECK(s.find(">1/3<") != std::string::npos);
  }

  TEST_CASE("cut overlay") {
    const std::string plain = emit_svg(build_w3(3));
    const std::string cut = emit_svg(build_w3(3), SvgOptions{argmax_cut(3, 3), std::nullopt});
    CHECK(count(plain, "#d62728") == 0);
    CHECK(count(cut, "#d62728") > 0);
  }

  TEST_CASE("rejects k != 3") { CHECK_THROWS(emit_svg(WeightFunction(4, 3))); }
}
