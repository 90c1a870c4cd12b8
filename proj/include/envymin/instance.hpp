#pragma once

#include "envymin/envy.hpp"

#include <map>
#include <optional>
#include <string>

namespace envymin {

// A problem instance as it travels through files: the graph, either one
// shared value list (input order preserved) or a per-agent value matrix, an
// optional root annotation for rooted-tree semantics, and free-form metadata.
struct Instance {
  Graph graph;
  std::vector<Rational> values;       // empty iff matrix is set
  std::optional<ValueMatrix> matrix;
  std::optional<int> root;            // 0-based here; 1-based in files
  std::map<std::string, std::string> metadata;

  bool identical() const { return !matrix.has_value(); }
  ValueProfile profile() const { return ValueProfile::from_input(values); }

  bool operator==(const Instance& other) const;
};

// JSON document, schema "envymin.instance/1". Vertices and the root are
// 1-based in the file. Values are rational strings ("3", "5/2", "0.25").
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

}  // namespace envymin
