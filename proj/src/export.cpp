#include "minoru/export.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace minoru {

namespace {

constexpr std::array<const char*, 8> kPalette{"#e6194b", "#3cb44b", "#4363d8", "#f58231",
                                               "#911eb4", "#42d4f4", "#f032e6", "#9a6324"};

}  // namespace

std::string to_dot(const Graph& g, const Witness* witness) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, fontsize=10];\n";
  std::set<VertexId> clustered;
  if (witness != nullptr) {
    std::size_t colour = 0;
    for (const auto& [h, set] : witness->branch_sets) {
      out << "  subgraph cluster_" << h << " {\n    label=\"" << h << "\";\n    style=filled;\n    color=\""
          << kPalette[colour++ % kPalette.size()] << "\";\n";
      for (VertexId x : set) {
        if (g.has_vertex(x) && clustered.insert(x).second) out << "    " << x << ";\n";
      }
      out << "  }\n";
    }
  }
  for (VertexId v : g.vertices()) {
    if (!clustered.count(v)) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_svg(const PolygonalEmbedding& p, const io::GridCoords* coords) {
  using Point = std::pair<double, double>;
  const PlaneGraph& g = p.graph();
  std::map<VertexId, Point> at;

  if (coords != nullptr && !coords->empty()) {
    for (const auto& [v, ij] : *coords) at[v] = {static_cast<double>(ij.second), static_cast<double>(ij.first)};
    // Corners sit just off the diagonal, between their two diagonal neighbours.
    const auto walk = g.outerface();
    for (std::size_t k = 0; k < walk.size(); ++k) {
      const VertexId x = g.tail(walk[k]);
      if (at.count(x)) continue;
      const VertexId before = g.tail(walk[(k + walk.size() - 1) % walk.size()]);
      const VertexId after = g.head(walk[k]);
      double cx = 0.0;
      double cy = 0.0;
      int known = 0;
      for (VertexId y : {before, after}) {
        if (auto it = at.find(y); it != at.end()) {
          cx += it->second.first;
          cy += it->second.second;
          ++known;
        }
      }
      if (known > 0) {
        cx /= known;
        cy /= known;
      }
      at[x] = {cx + 0.6, cy - 0.6};
    }
  } else {
    const std::size_t sides = p.border().size();
    const auto corner_point = [&](std::size_t i) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(sides) -
                           std::numbers::pi / 2.0;
      return Point{std::cos(angle), std::sin(angle)};
    };
    for (std::size_t i = 0; i < sides; ++i) {
      const Point a = corner_point(i);
      const Point b = corner_point((i + 1) % sides);
      at[p.border()[i]] = a;
      const auto& side = p.sides()[i];
      for (std::size_t k = 0; k < side.size(); ++k) {
        const double t = static_cast<double>(k + 1) / static_cast<double>(side.size() + 1);
        at[side[k]] = {a.first + t * (b.first - a.first), a.second + t * (b.second - a.second)};
      }
    }
    const auto inside = p.internal_vertices();
    for (VertexId v : inside) at[v] = {0.0, 0.0};
    for (int round = 0; round < 200; ++round) {
      for (VertexId v : inside) {
        const auto nb = g.neighbors(v);
        if (nb.empty()) continue;
        Point sum{0.0, 0.0};
        for (VertexId y : nb) {
          sum.first += at[y].first;
          sum.second += at[y].second;
        }
        at[v] = {sum.first / static_cast<double>(nb.size()), sum.second / static_cast<double>(nb.size())};
      }
    }
  }

  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;
  bool first = true;
  for (const auto& [v, pt] : at) {
    min_x = first ? pt.first : std::min(min_x, pt.first);
    min_y = first ? pt.second : std::min(min_y, pt.second);
    max_x = first ? pt.first : std::max(max_x, pt.first);
    max_y = first ? pt.second : std::max(max_y, pt.second);
    first = false;
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double size = 600.0;
  const double margin = 30.0;
  const auto px = [&](const Point& pt) {
    return Point{margin + (pt.first - min_x) / span * size, margin + (pt.second - min_y) / span * size};
  };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  const double canvas = size + 2 * margin;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\"" << canvas
      << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n";
  std::set<EdgeId> outer_edges;
  for (Dart d : g.outerface()) outer_edges.insert(d.edge);
  for (const Edge& e : g.edges()) {
    const Point a = px(at[e.u]);
    const Point b = px(at[e.v]);
    out << "  <line x1=\"" << a.first << "\" y1=\"" << a.second << "\" x2=\"" << b.first << "\" y2=\"" << b.second
        << "\" stroke=\"" << (outer_edges.count(e.id) ? "#222" : "#999") << "\" stroke-width=\""
        << (outer_edges.count(e.id) ? 2 : 1) << "\"/>\n";
  }
  for (const auto& [v, pt] : at) {
    const Point c = px(pt);
    const bool corner = p.is_corner(v);
    out << "  <circle cx=\"" << c.first << "\" cy=\"" << c.second << "\" r=\"" << (corner ? 6 : 4) << "\" fill=\""
        << (corner ? "#d62728" : "#1f77b4") << "\"/>\n";
    out << "  <text x=\"" << c.first + 5 << "\" y=\"" << c.second - 5 << "\" font-size=\"9\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace minoru
