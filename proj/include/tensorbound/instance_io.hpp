#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "tensorbound/demos.hpp"
#include "tensorbound/graph.hpp"
#include "tensorbound/matrix.hpp"

namespace tensorbound {

inline constexpr std::string_view kSchemaVersion = "tensorbound/1";

/// Instance file layout (UTF-8 JSON):
///   { "schema_version": "tensorbound/1", "dim_h": 2, "dim_k": 2,
///     "x": [matrix, ...], "y": [matrix, ...], "weights": [1.0, ...],
///     "graph": { "edges": [[0, 1], ...] } }
/// A matrix is an array of rows, each row an array of [re, im] pairs. Vertex indices are 0-based;
/// "weights" and "graph" are optional.
nlohmann::json matrix_to_json(const OperatorMatrix& a);
OperatorMatrix matrix_from_json(const nlohmann::json& j, std::string_view what);

nlohmann::json instance_to_json(const InstanceBundle& bundle);
/// Throws ValidationError naming the offending field or operator.
InstanceBundle instance_from_json(const nlohmann::json& j);

/// Throws IoError when the file cannot be opened, ValidationError on malformed JSON or content.
InstanceBundle read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const InstanceBundle& bundle);

}  // namespace tensorbound
