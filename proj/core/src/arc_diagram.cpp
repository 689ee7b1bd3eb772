#include "iplab/arc_diagram.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace iplab {

namespace {

constexpr double kSpacing = 28.0;
constexpr double kMargin = 30.0;
constexpr double kLabelRoom = 22.0;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string arc_diagram_svg(const OrderedGraph& g, const EdgeColoring* coloring) {
  if (coloring != nullptr) {
    require(static_cast<int>(coloring->color.size()) == g.edge_count(),
            "coloring does not cover the edge list");
  }
  int n = g.vertex_count();
  auto x_of = [](Vertex v) { return kMargin + (v - 1) * kSpacing; };

  int max_span = 0;
  for (const auto& [u, v] : g.edges()) max_span = std::max(max_span, v - u);
  double max_radius = max_span * kSpacing / 2.0;

  double width = 2 * kMargin + (n > 0 ? (n - 1) * kSpacing : 0.0);
  double height = kMargin + max_radius + kLabelRoom;
  double base_y = height - kLabelRoom;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed1(width)
      << "\" height=\"" << fixed1(height) << "\" viewBox=\"0 0 " << fixed1(width)
      << " " << fixed1(height) << "\">\n";
  out << "  <line x1=\"" << fixed1(kMargin - 10.0) << "\" y1=\"" << fixed1(base_y)
      << "\" x2=\"" << fixed1(width - kMargin + 10.0) << "\" y2=\"" << fixed1(base_y)
      << "\" stroke=\"#999999\" stroke-width=\"1.0\"/>\n";

  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& [u, v] = g.edges()[static_cast<size_t>(i)];
    double r = (v - u) * kSpacing / 2.0;
    const char* stroke = "#333333";
    if (coloring != nullptr) {
      int c = std::max(1, coloring->color[static_cast<size_t>(i)]);
      stroke = kPalette[static_cast<size_t>((c - 1) % static_cast<int>(kPalette.size()))];
    }
    out << "  <path d=\"M " << fixed1(x_of(u)) << " " << fixed1(base_y) << " A "
        << fixed1(r) << " " << fixed1(r) << " 0 0 1 " << fixed1(x_of(v)) << " "
        << fixed1(base_y) << "\" fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"1.5\"/>\n";
  }

  for (Vertex v = 1; v <= n; ++v) {
    out << "  <circle cx=\"" << fixed1(x_of(v)) << "\" cy=\"" << fixed1(base_y)
        << "\" r=\"3.0\" fill=\"#111111\"/>\n";
    out << "  <text x=\"" << fixed1(x_of(v)) << "\" y=\"" << fixed1(base_y + 16.0)
        << "\" font-size=\"10\" font-family=\"monospace\" text-anchor=\"middle\">"
        << v << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace iplab
