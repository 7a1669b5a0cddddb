#include "tensorbound/instance_io.hpp"

#include <cstdint>
#include <fstream>
#include <string>

#include "tensorbound/errors.hpp"

namespace tensorbound {

using nlohmann::json;

json matrix_to_json(const OperatorMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(json::array({a(i, j).real(), a(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

OperatorMatrix matrix_from_json(const json& j, std::string_view what) {
  const std::string name(what);
  if (!j.is_array() || j.empty()) throw ValidationError(name + ": expected a non-empty array of rows");
  const std::size_t n = j.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != n) {
      throw ValidationError(name + ": row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ValidationError(name + ": entry (" + std::to_string(r) + ", " + std::to_string(c) +
                              ") must be a [re, im] pair of numbers");
      }
      entries.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
  }
  try {
    return OperatorMatrix(n, std::move(entries));
  } catch (const ValidationError& err) {
    throw ValidationError(name + ": " + err.what());
  }
}

json instance_to_json(const InstanceBundle& bundle) {
  const TensorSumInstance& inst = bundle.instance;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dim_h"] = inst.dim_h();
  j["dim_k"] = inst.dim_k();
  j["x"] = json::array();
  j["y"] = json::array();
  for (const auto& a : inst.x()) j["x"].push_back(matrix_to_json(a));
  for (const auto& b : inst.y()) j["y"].push_back(matrix_to_json(b));
  j["weights"] = std::vector<double>(inst.weights().begin(), inst.weights().end());
  if (bundle.graph) {
    json edges = json::array();
    for (const auto& [a, b] : bundle.graph->edges()) edges.push_back(json::array({a, b}));
    j["graph"] = {{"edges", edges}};
  }
  return j;
}

namespace {

std::size_t positive_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<std::size_t>() == 0) {
    throw ValidationError(std::string("'") + key + "' must be a positive integer");
  }
  return j[key].get<std::size_t>();
}

std::vector<OperatorMatrix> operator_list(const json& j, const char* key, std::size_t dim) {
  if (!j.contains(key) || !j[key].is_array() || j[key].empty()) {
    throw ValidationError(std::string("'") + key + "' must be a non-empty array of matrices");
  }
  std::vector<OperatorMatrix> out;
  for (std::size_t i = 0; i < j[key].size(); ++i) {
    const std::string what = std::string(key) + "[" + std::to_string(i) + "]";
    OperatorMatrix a = matrix_from_json(j[key][i], what);
    if (a.dim() != dim) {
      throw ValidationError(what + ": dimension " + std::to_string(a.dim()) + " does not match the declared " +
                            std::to_string(dim));
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

InstanceBundle instance_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("instance file must contain a JSON object");
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion) {
    throw ValidationError("unsupported or missing schema_version (expected \"" + std::string(kSchemaVersion) + "\")");
  }
  const std::size_t dh = positive_size(j, "dim_h");
  const std::size_t dk = positive_size(j, "dim_k");
  auto x = operator_list(j, "x", dh);
  auto y = operator_list(j, "y", dk);

  std::vector<double> weights;
  if (j.contains("weights") && !j["weights"].is_null()) {
    if (!j["weights"].is_array()) throw ValidationError("'weights' must be an array of numbers");
    for (const auto& w : j["weights"]) {
      if (!w.is_number()) throw ValidationError("'weights' must be an array of numbers");
      weights.push_back(w.get<double>());
    }
  }
  const std::size_t m = x.size();
  TensorSumInstance inst(std::move(x), std::move(y), std::move(weights));

  std::optional<InteractionGraph> graph;
  if (j.contains("graph") && !j["graph"].is_null()) {
    const json& g = j["graph"];
    if (!g.is_object() || !g.contains("edges") || !g["edges"].is_array()) {
      throw ValidationError("'graph' must be an object with an 'edges' array");
    }
    std::vector<VertexPair> edges;
    for (const auto& e : g["edges"]) {
      auto vertex = [](const json& v) { return v.is_number_integer() && v.get<std::int64_t>() >= 0; };
      if (!e.is_array() || e.size() != 2 || !vertex(e[0]) || !vertex(e[1])) {
        throw ValidationError("graph edges must be [i, j] pairs of non-negative integers");
      }
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    graph.emplace(m, std::move(edges));
  }
  return {std::move(inst), std::move(graph)};
}

InstanceBundle read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("cannot parse " + path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

void write_instance_file(const std::filesystem::path& path, const InstanceBundle& bundle) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << instance_to_json(bundle).dump(2) << '\n';
  if (!out) throw IoError("failed while writing " + path.string());
}

}  // namespace tensorbound
