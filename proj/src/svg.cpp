#include "mwgap/svg.hpp"

#include "mwgap/dual.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mwgap {

namespace {

struct Canvas {
  double size;
  double margin;
  int n;

  // e^1 bottom left, e^2 bottom right, e^3 on top.
  std::pair<double, double> place(double x2, double x3) const {
    const double h = std::sqrt(3.0) / 2.0;
    const double px = margin + size * (x2 + x3 / 2.0);
    const double py = margin + size * h * (1.0 - x3);
    return {px, py};
  }
  std::pair<double, double> place(const GridPoint& p) const {
    return place(static_cast<double>(p[1]) / n, static_cast<double>(p[2]) / n);
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string emit_svg(const WeightFunction& w, const SvgOptions& options) {
  if (w.k() != 3) throw std::invalid_argument("figures are drawn for k = 3 only");
  if (options.cut && (options.cut->k() != 3 || options.cut->n() != w.n())) {
    throw std::invalid_argument("cut does not match the instance grid");
  }
  if (options.potential && (*options.potential < 1 || *options.potential > 3)) {
    throw std::invalid_argument("potential index must be in [1, 3]");
  }
  const int n = w.n();
  const Canvas canvas{options.size, 20.0, n};
  const double height = options.size * std::sqrt(3.0) / 2.0 + 2 * canvas.margin;
  const double width = options.size + 2 * canvas.margin;

  Rational heaviest(0);
  for (const auto& [e, value] : w.entries()) {
    if (value > heaviest) heaviest = value;
  }
  const double max_w = heaviest.get_d();
  const double max_stroke = std::max(1.0, 24.0 / n);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  out << "<g stroke-linecap=\"round\">\n";
  for (const auto& e : enumerate_edges(3, n)) {
    const double value = w.at(e).get_d();
    const auto [x1, y1] = canvas.place(e.u());
    const auto [x2, y2] = canvas.place(e.v());
    out << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2) << '"';
    const bool cut = options.cut && options.cut->label(e.u()) != options.cut->label(e.v());
    const char* color = cut ? "#d62728" : "#222222";
    if (value == 0.0) {
      out << " stroke=\"" << color << "\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\"";
    } else {
      out << " stroke=\"" << color << "\" stroke-width=\"" << num(0.5 + max_stroke * value / max_w) << '"';
    }
    out << "/>\n";
  }
  out << "</g>\n";

  if (options.potential) {
    const DualGraph g(n, w);
    const int i = *options.potential;
    const double font = std::max(4.0, options.size / (3.0 * n));
    out << "<g font-family=\"sans-serif\" font-size=\"" << num(font) << "\" text-anchor=\"middle\" fill=\"#1f77b4\">\n";
    for (int f = 0; f < g.face_count(); ++f) {
      const auto& c = g.faces()[static_cast<std::size_t>(f)].centroid;
      const auto [px, py] = canvas.place(c[1] / (3.0 * n), c[2] / (3.0 * n));
      out << "<text x=\"" << num(px) << "\" y=\"" << num(py + font / 3.0) << "\">" << to_string(potential(i, g, f))
          << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace mwgap
