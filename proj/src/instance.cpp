#include "envymin/instance.hpp"

#include <json.hpp>

namespace envymin {

using ordered_json = nlohmann::ordered_json;

bool Instance::operator==(const Instance& other) const {
  bool matrices_equal = matrix.has_value() == other.matrix.has_value() &&
                        (!matrix || matrix->v == other.matrix->v);
  return graph.n == other.graph.n && graph.edges == other.graph.edges &&
         values == other.values && matrices_equal && root == other.root &&
         metadata == other.metadata;
}

Instance parse_instance(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw input_error("instance must be a JSON object");
  if (j.value("schema", "") != "envymin.instance/1")
    throw input_error("unknown instance schema, expected envymin.instance/1");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw input_error("instance needs an integer vertex count n");
  const int n = j["n"].get<int>();

  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw input_error("each edge must be a pair of vertex ids");
      edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
    }
  }

  Instance inst;
  inst.graph = Graph(n, std::move(edges));

  const bool has_values = j.contains("values");
  const bool has_matrix = j.contains("value_matrix");
  if (has_values == has_matrix)
    throw input_error("instance needs exactly one of values or value_matrix");
  if (has_values) {
    for (const auto& v : j["values"]) {
      if (!v.is_string()) throw input_error("values must be rational strings");
      inst.values.push_back(parse_rational(v.get<std::string>()));
    }
    if (static_cast<int>(inst.values.size()) != n)
      throw input_error("values must list exactly n entries");
  } else {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j["value_matrix"]) {
      std::vector<Rational> r;
      for (const auto& v : row) {
        if (!v.is_string()) throw input_error("value_matrix entries must be rational strings");
        r.push_back(parse_rational(v.get<std::string>()));
      }
      if (static_cast<int>(r.size()) != n)
        throw input_error("value_matrix rows must have n entries");
      rows.push_back(std::move(r));
    }
    if (static_cast<int>(rows.size()) != n)
      throw input_error("value_matrix must have n rows");
    inst.matrix = ValueMatrix::from_rows(std::move(rows));
  }

  if (j.contains("root")) {
    if (!j["root"].is_number_integer()) throw input_error("root must be a vertex id");
    int root = j["root"].get<int>() - 1;
    if (root < 0 || root >= n) throw input_error("root out of range");
    inst.root = root;
  }
  if (j.contains("metadata")) {
    for (auto& [key, val] : j["metadata"].items()) {
      if (!val.is_string()) throw input_error("metadata values must be strings");
      inst.metadata[key] = val.get<std::string>();
    }
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  ordered_json j;
  j["schema"] = "envymin.instance/1";
  j["n"] = inst.graph.n;
  j["edges"] = ordered_json::array();
  for (auto [u, v] : inst.graph.edges) j["edges"].push_back({u + 1, v + 1});
  if (inst.identical()) {
    j["values"] = ordered_json::array();
    for (const auto& v : inst.values) j["values"].push_back(format_rational(v));
  } else {
    j["value_matrix"] = ordered_json::array();
    for (const auto& row : inst.matrix->v) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) r.push_back(format_rational(v));
      j["value_matrix"].push_back(std::move(r));
    }
  }
  if (inst.root) j["root"] = *inst.root + 1;
  if (!inst.metadata.empty()) {
    j["metadata"] = ordered_json::object();
    for (const auto& [key, val] : inst.metadata) j["metadata"][key] = val;
  }
  return j.dump(2) + "\n";
}

}  // namespace envymin
