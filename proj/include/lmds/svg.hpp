#pragma once

// Deterministic SVG 1.1 rendering of instances, solutions and exchange-graph
// arc drawings. Numbers are printed with "%.3f" so output is byte-stable.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "lmds/exchange.hpp"
#include "lmds/geometry.hpp"
#include "lmds/graph.hpp"

namespace lmds {

struct SvgOptions {
  VertexSet solution;         // highlighted frames
  const ArcDrawing* arcs = nullptr;
  VertexSet blue;             // corners marked with circles
  VertexSet red;              // corners marked with squares
};

namespace detail {

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool empty = true;
  void add(double x, double y) {
    if (empty) {
      x0 = x1 = x;
      y0 = y1 = y;
      empty = false;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

// World point on the diagonal at abscissa x, in input coordinates.
inline std::pair<double, double> on_diagonal(const ArcDrawing& d, Coord x) {
  const double px = static_cast<double>(x), py = static_cast<double>(d.diagonal.d - x);
  return d.reflected ? std::pair{-px, -py} : std::pair{px, py};
}

}  // namespace detail

inline std::string render_svg(const GeomInstance& inst, const SvgOptions& opt = {}) {
  using detail::num;
  const auto frames = inst.uses_rects() ? std::vector<LFrame>{} : inst.frames;

  detail::Box box;
  box.add(0, 0);
  for (const auto& f : frames) {
    box.add(f.corner.x, f.corner.y);
    box.add(f.horizontal_end().x, f.horizontal_end().y);
    box.add(f.vertical_end().x, f.vertical_end().y);
  }
  for (const auto& r : inst.rects) {
    box.add(r.lo.x, r.lo.y);
    box.add(r.hi.x, r.hi.y);
  }
  if (opt.arcs) {
    for (const auto& p : opt.arcs->pieces) {
      const auto a = detail::on_diagonal(*opt.arcs, p.from);
      const auto b = detail::on_diagonal(*opt.arcs, p.to);
      const double cx = (a.first + b.first) / 2, cy = (a.second + b.second) / 2;
      const double rad = std::hypot(b.first - a.first, b.second - a.second) / 2;
      box.add(cx - rad, cy - rad);
      box.add(cx + rad, cy + rad);
    }
  }
  const double margin = 1;
  box.add(box.x0 - margin, box.y0 - margin);
  box.add(box.x1 + margin, box.y1 + margin);
  const double extent = std::max(box.x1 - box.x0, box.y1 - box.y0);
  const double scale = std::min(20.0, 800.0 / extent);
  const double width = (box.x1 - box.x0) * scale, height = (box.y1 - box.y0) * scale;
  auto sx = [&](double x) { return num((x - box.x0) * scale); };
  auto sy = [&](double y) { return num((box.y1 - y) * scale); };
  auto pt = [&](double x, double y) { return sx(x) + "," + sy(y); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" + num(height) +
       "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  s += "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\">\n";
  s += "<line x1=\"" + sx(box.x0) + "\" y1=\"" + sy(0) + "\" x2=\"" + sx(box.x1) + "\" y2=\"" + sy(0) + "\"/>\n";
  s += "<line x1=\"" + sx(0) + "\" y1=\"" + sy(box.y0) + "\" x2=\"" + sx(0) + "\" y2=\"" + sy(box.y1) + "\"/>\n";
  s += "</g>\n";

  s += "<g stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
  if (inst.diagonal) {
    // x + y = d clipped to the box along x.
    const double d = static_cast<double>(inst.diagonal->d);
    const double xa = std::max(box.x0, d - box.y1), xb = std::min(box.x1, d - box.y0);
    if (xa <= xb) s += "<line x1=\"" + sx(xa) + "\" y1=\"" + sy(d - xa) + "\" x2=\"" + sx(xb) + "\" y2=\"" + sy(d - xb) + "\"/>\n";
  }
  if (inst.vertical) {
    const double v = static_cast<double>(*inst.vertical);
    s += "<line x1=\"" + sx(v) + "\" y1=\"" + sy(box.y0) + "\" x2=\"" + sx(v) + "\" y2=\"" + sy(box.y1) + "\"/>\n";
  }
  if (inst.horizontal) {
    const double h = static_cast<double>(*inst.horizontal);
    s += "<line x1=\"" + sx(box.x0) + "\" y1=\"" + sy(h) + "\" x2=\"" + sx(box.x1) + "\" y2=\"" + sy(h) + "\"/>\n";
  }
  s += "</g>\n";

  auto chosen = [&](Vertex v) { return std::binary_search(opt.solution.begin(), opt.solution.end(), v); };
  s += "<g fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto& f = frames[i];
    const char* color = chosen(static_cast<Vertex>(i)) ? "#d62728" : "#1f4e79";
    s += "<polyline stroke=\"" + std::string(color) + "\" points=\"" + pt(f.vertical_end().x, f.vertical_end().y) + " " +
         pt(f.corner.x, f.corner.y) + " " + pt(f.horizontal_end().x, f.horizontal_end().y) + "\"><title>" + f.id +
         "</title></polyline>\n";
  }
  for (std::size_t i = 0; i < inst.rects.size(); ++i) {
    const auto& r = inst.rects[i];
    const char* color = chosen(static_cast<Vertex>(i)) ? "#d62728" : "#1f4e79";
    s += "<rect stroke=\"" + std::string(color) + "\" x=\"" + sx(r.lo.x) + "\" y=\"" + sy(r.hi.y) + "\" width=\"" +
         num((r.hi.x - r.lo.x) * scale) + "\" height=\"" + num((r.hi.y - r.lo.y) * scale) + "\"><title>" + r.id +
         "</title></rect>\n";
  }
  s += "</g>\n";

  if (!frames.empty()) {
    const double mark = 3;
    for (Vertex v : opt.blue) {
      const auto& c = frames[v].corner;
      s += "<circle fill=\"#1f77b4\" cx=\"" + sx(c.x) + "\" cy=\"" + sy(c.y) + "\" r=\"" + num(mark) + "\"/>\n";
    }
    for (Vertex v : opt.red) {
      const auto& c = frames[v].corner;
      s += "<rect fill=\"#d62728\" x=\"" + num((c.x - box.x0) * scale - mark) + "\" y=\"" +
           num((box.y1 - c.y) * scale - mark) + "\" width=\"" + num(2 * mark) + "\" height=\"" + num(2 * mark) + "\"/>\n";
    }
  }

  if (opt.arcs) {
    // One path per arc; a mixed arc's two half-circles join at its junction.
    std::map<int, std::vector<ArcPiece>> by_arc;
    for (const auto& p : opt.arcs->pieces) by_arc[p.arc].push_back(p);
    s += "<g fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1\">\n";
    for (auto& [id, pieces] : by_arc) {
      std::sort(pieces.begin(), pieces.end(), [](const ArcPiece& a, const ArcPiece& b) { return a.from < b.from; });
      const auto start = detail::on_diagonal(*opt.arcs, pieces.front().from);
      std::string d = "M " + pt(start.first, start.second);
      for (const auto& p : pieces) {
        const auto a = detail::on_diagonal(*opt.arcs, p.from);
        const auto b = detail::on_diagonal(*opt.arcs, p.to);
        const double rad = std::hypot(b.first - a.first, b.second - a.second) / 2 * scale;
        // Point reflection preserves orientation, so the upper half always
        // lies to the left of travel toward larger abscissae.
        const char* sweep = p.half == HalfPlane::Upper ? "1" : "0";
        d += " A " + num(rad) + " " + num(rad) + " 0 0 " + sweep + " " + pt(b.first, b.second);
      }
      s += "<path d=\"" + d + "\"/>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace lmds
