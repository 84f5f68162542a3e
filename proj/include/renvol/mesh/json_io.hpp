// Copyright 2026 The renvol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON formats for metric overlays ({"edge_lengths": [[i, j, length], ...]})
// and vertex fields (a plain array indexed by vertex).

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "renvol/error.hpp"
#include "renvol/mesh/fields.hpp"
#include "renvol/mesh/metric.hpp"

namespace renvol {

inline nlohmann::json edge_lengths_to_json(const TriMesh& mesh, const DiscreteMetric& metric) {
  nlohmann::json arr = nlohmann::json::array();
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto [i, j] = mesh.edge_vertices(e);
    arr.push_back({i, j, metric.length(e)});
  }
  return arr;
}

/// Every mesh edge must appear exactly once, in either orientation.
inline DiscreteMetric edge_lengths_from_json(const TriMesh& mesh, const nlohmann::json& arr) {
  if (!arr.is_array()) throw MetricError("edge_lengths must be an array");
  std::vector<double> len(mesh.num_edges(), -1.0);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& row = arr[k];
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() || !row[1].is_number_integer() ||
        !row[2].is_number())
      throw MetricError("edge_lengths entry " + std::to_string(k) + " is not [i, j, length]");
    const int i = row[0].get<int>(), j = row[1].get<int>();
    if (i < 0 || j < 0 || i >= mesh.num_vertices() || j >= mesh.num_vertices())
      throw MetricError("edge_lengths entry " + std::to_string(k) + " has a vertex out of range");
    const int e = mesh.edge_index(i, j);
    if (e < 0)
      throw MetricError("edge_lengths entry " + std::to_string(k) + " names a non-edge (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
    if (len[e] >= 0) throw MetricError("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") listed twice");
    len[e] = row[2].get<double>();
  }
  for (int e = 0; e < mesh.num_edges(); ++e)
    if (len[e] < 0) {
      const auto [i, j] = mesh.edge_vertices(e);
      throw MetricError("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") has no length");
    }
  return DiscreteMetric::validated(mesh, std::move(len));
}

inline void save_metric(const std::filesystem::path& path, const TriMesh& mesh, const DiscreteMetric& metric) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << nlohmann::json{{"edge_lengths", edge_lengths_to_json(mesh, metric)}}.dump() << '\n';
}

inline DiscreteMetric load_metric(const std::filesystem::path& path, const TriMesh& mesh) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MetricError(path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("edge_lengths")) throw MetricError(path.string() + ": missing \"edge_lengths\"");
  return edge_lengths_from_json(mesh, j["edge_lengths"]);
}

inline void save_vertex_field(const std::filesystem::path& path, const VertexField& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << nlohmann::json(f.values).dump() << '\n';
}

inline VertexField load_vertex_field(const std::filesystem::path& path, int num_vertices) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
  if (!j.is_array() || static_cast<int>(j.size()) != num_vertices)
    throw DomainError(path.string() + ": expected an array of " + std::to_string(num_vertices) + " numbers");
  VertexField f(num_vertices, 0.0);
  for (int v = 0; v < num_vertices; ++v) {
    if (!j[v].is_number()) throw DomainError(path.string() + ": entry " + std::to_string(v) + " is not a number");
    f[v] = j[v].get<double>();
  }
  if (!f.all_finite()) throw DomainError(path.string() + ": non-finite value");
  return f;
}

}  // namespace renvol
