#pragma once

// Line-oriented text formats. Instances:
//
//   format 1
//   model standard|edge
//   kind frames|rects
//   diagonal <d>        optional, the line x + y = d
//   vertical <v>        optional, the line x = v
//   horizontal <h>      optional, the line y = h
//   <id> <x> <y> <hspan> <vspan>      one per frame
//   <id> <lox> <loy> <hix> <hiy>      one per rectangle
//
// Monotone drawings:
//
//   vars <n>
//   clause +|- <depth> <var>...       variables 1-based
//
// `#` starts a comment. Headers have two fields and records five, so an id
// may coincide with a header keyword.

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lmds/error.hpp"
#include "lmds/geometry.hpp"
#include "lmds/reductions.hpp"

namespace lmds {

namespace detail {

struct Line {
  int number;
  std::vector<std::string_view> fields;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.fields.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] inline void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline Coord parse_int(std::string_view s, int line) {
  Coord v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) parse_fail(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

inline GeomInstance parse_instance(std::string_view text) {
  GeomInstance inst;
  bool rects = false;
  bool seen_record = false;
  bool seen_format = false;
  for (const auto& l : detail::tokenize(text)) {
    const auto& f = l.fields;
    if (f.size() == 2) {
      if (seen_record) detail::parse_fail(l.number, "header after records");
      if (f[0] == "format") {
        if (f[1] != "1") detail::parse_fail(l.number, "unsupported format version " + std::string(f[1]));
        seen_format = true;
      } else if (f[0] == "model") {
        if (f[1] == "standard") {
          inst.model = Model::Standard;
        } else if (f[1] == "edge") {
          inst.model = Model::Edge;
        } else {
          detail::parse_fail(l.number, "unknown model " + std::string(f[1]));
        }
      } else if (f[0] == "kind") {
        if (f[1] != "frames" && f[1] != "rects") detail::parse_fail(l.number, "unknown kind " + std::string(f[1]));
        rects = f[1] == "rects";
      } else if (f[0] == "diagonal") {
        inst.diagonal = Diagonal{detail::parse_int(f[1], l.number)};
      } else if (f[0] == "vertical") {
        inst.vertical = detail::parse_int(f[1], l.number);
      } else if (f[0] == "horizontal") {
        inst.horizontal = detail::parse_int(f[1], l.number);
      } else {
        detail::parse_fail(l.number, "unknown header " + std::string(f[0]));
      }
    } else if (f.size() == 5) {
      if (!seen_format) detail::parse_fail(l.number, "missing 'format 1' header");
      seen_record = true;
      Coord v[4];
      for (int i = 0; i < 4; ++i) v[i] = detail::parse_int(f[i + 1], l.number);
      if (rects) {
        inst.rects.push_back({{v[0], v[1]}, {v[2], v[3]}, std::string(f[0])});
      } else {
        inst.frames.push_back({{v[0], v[1]}, v[2], v[3], std::string(f[0])});
      }
    } else {
      detail::parse_fail(l.number, "expected a two-field header or a five-field record");
    }
  }
  if (!seen_format) throw Error(ErrorCode::ParseError, "missing 'format 1' header");
  validate(inst);
  return inst;
}

inline std::string emit_instance(const GeomInstance& inst) {
  std::ostringstream out;
  out << "format 1\n";
  out << "model " << (inst.model == Model::Edge ? "edge" : "standard") << "\n";
  out << "kind " << (inst.uses_rects() ? "rects" : "frames") << "\n";
  if (inst.diagonal) out << "diagonal " << inst.diagonal->d << "\n";
  if (inst.vertical) out << "vertical " << *inst.vertical << "\n";
  if (inst.horizontal) out << "horizontal " << *inst.horizontal << "\n";
  for (const auto& r : inst.rects) out << r.id << ' ' << r.lo.x << ' ' << r.lo.y << ' ' << r.hi.x << ' ' << r.hi.y << "\n";
  for (const auto& f : inst.frames) {
    out << f.id << ' ' << f.corner.x << ' ' << f.corner.y << ' ' << f.hspan << ' ' << f.vspan << "\n";
  }
  return out.str();
}

inline Monotone3SATDrawing parse_sat_drawing(std::string_view text) {
  Monotone3SATDrawing d;
  bool have_vars = false;
  for (const auto& l : detail::tokenize(text)) {
    const auto& f = l.fields;
    if (f[0] == "vars" && f.size() == 2) {
      d.num_vars = static_cast<int>(detail::parse_int(f[1], l.number));
      have_vars = true;
    } else if (f[0] == "clause" && f.size() >= 4) {
      if (!have_vars) detail::parse_fail(l.number, "clause before 'vars'");
      if (f[1] != "+" && f[1] != "-") detail::parse_fail(l.number, "clause sign must be + or -");
      MonotoneClause c;
      c.positive = f[1] == "+";
      c.depth = static_cast<int>(detail::parse_int(f[2], l.number));
      for (std::size_t i = 3; i < f.size(); ++i) c.vars.push_back(static_cast<int>(detail::parse_int(f[i], l.number)) - 1);
      d.clauses.push_back(std::move(c));
    } else {
      detail::parse_fail(l.number, "expected 'vars <n>' or 'clause <sign> <depth> <var>...'");
    }
  }
  if (!have_vars) throw Error(ErrorCode::ParseError, "missing 'vars' line");
  validate(d);
  return d;
}

inline std::string emit_sat_drawing(const Monotone3SATDrawing& d) {
  std::ostringstream out;
  out << "vars " << d.num_vars << "\n";
  for (const auto& c : d.clauses) {
    out << "clause " << (c.positive ? '+' : '-') << ' ' << c.depth;
    for (int v : c.vars) out << ' ' << v + 1;
    out << "\n";
  }
  return out.str();
}

}  // namespace lmds
