#pragma once

// Run reports: one `key: value` pair per line, in insertion order.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "lmds/graph.hpp"

namespace lmds {

class RunReport {
 public:
  void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "yes" : "no")); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }

  void add_ratio(std::string key, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    add(std::move(key), std::string(buf));
  }

  // Space-separated labels of the given vertices.
  void add_ids(std::string key, const IntersectionGraph& g, const VertexSet& s) {
    std::string v;
    for (Vertex x : s) {
      if (!v.empty()) v += ' ';
      v += g.label(x);
    }
    add(std::move(key), v);
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace lmds
