#include "spectra/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace spectra {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 56.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string polygon_overlay_svg(const LabelledPolygon& upper,
                                const LabelledPolygon& lower) {
  const int n = upper.polygon.segments();
  double ymax = 1e-9;
  for (int i = 0; i <= n; ++i)
    ymax = std::max({ymax, upper.polygon.heights[i], lower.polygon.heights[i]});
  const double sx = (kWidth - 2 * kMargin) / std::max(1, n);
  const double sy = (kHeight - 2 * kMargin) / ymax;
  auto X = [&](double i) { return kMargin + sx * i; };
  auto Y = [&](double h) { return kHeight - kMargin - sy * h; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << int(kWidth)
      << "\" height=\"" << int(kHeight) << "\" viewBox=\"0 0 " << int(kWidth)
      << " " << int(kHeight) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\""
      << fmt(X(n)) << "\" y2=\"" << fmt(Y(0))
      << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  auto draw = [&](const LabelledPolygon& p, double label_dy) {
    out << "<polyline fill=\"none\" stroke=\"" << p.color
        << "\" stroke-width=\"2\" points=\"";
    for (int i = 0; i <= n; ++i) {
      if (i) out << ' ';
      out << fmt(X(i)) << ',' << fmt(Y(p.polygon.heights[i]));
    }
    out << "\"/>\n";
    for (int i = 0; i <= n; ++i) {
      out << "<circle cx=\"" << fmt(X(i)) << "\" cy=\""
          << fmt(Y(p.polygon.heights[i])) << "\" r=\"3\" fill=\"" << p.color
          << "\"/>\n";
      if (i < int(p.vertex_labels.size())) {
        out << "<text x=\"" << fmt(X(i) + 5) << "\" y=\""
            << fmt(Y(p.polygon.heights[i]) + label_dy) << "\" font-size=\"11\" "
            << "font-family=\"monospace\" fill=\"" << p.color << "\">("
            << i << ", " << p.vertex_labels[i] << ")</text>\n";
      }
    }
    out << "<text x=\"" << fmt(kMargin) << "\" y=\""
        << fmt(label_dy < 0 ? 20.0 : 36.0) << "\" font-size=\"13\" "
        << "font-family=\"monospace\" fill=\"" << p.color << "\">" << p.name
        << "</text>\n";
  };
  draw(upper, -6.0);
  draw(lower, 14.0);
  out << "</svg>\n";
  return out.str();
}

}  // namespace spectra
