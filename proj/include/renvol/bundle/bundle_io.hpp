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

// Bundle files: JSON with the mesh referenced by path (relative to the
// bundle file), g0 as edge-length triples, the shape field as [a, b, d] per
// face, the face frames as [x1, x2, y2] (corner 1 at (x1, 0), corner 2 at
// (x2, y2)), the kind tag and generation metadata.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "json.hpp"

#include "renvol/bundle/surface_bundle.hpp"
#include "renvol/mesh/json_io.hpp"
#include "renvol/mesh/mesh_io.hpp"

namespace renvol {

namespace bundle_io_detail {

inline nlohmann::json tolerances_to_json(const Tolerances& t) {
  return {{"solver", t.solver},
          {"integral", t.integral},
          {"cross_validation", t.cross_validation},
          {"gauss", t.gauss},
          {"mesh_curvature", t.mesh_curvature},
          {"inequality", t.inequality},
          {"finite_part", t.finite_part},
          {"pole_residue", t.pole_residue}};
}

inline Tolerances tolerances_from_json(const nlohmann::json& j) {
  Tolerances t;
  t.solver = j.value("solver", t.solver);
  t.integral = j.value("integral", t.integral);
  t.cross_validation = j.value("cross_validation", t.cross_validation);
  t.gauss = j.value("gauss", t.gauss);
  t.mesh_curvature = j.value("mesh_curvature", t.mesh_curvature);
  t.inequality = j.value("inequality", t.inequality);
  t.finite_part = j.value("finite_part", t.finite_part);
  t.pole_residue = j.value("pole_residue", t.pole_residue);
  if (!t.valid()) throw DomainError("bundle tolerances must be positive");
  return t;
}

inline nlohmann::json recipe_to_json(const LambdaRecipe& r) {
  nlohmann::json centers = nlohmann::json::array();
  for (const auto& c : r.centers) centers.push_back({c.x(), c.y(), c.z()});
  return {{"amplitude", r.amplitude},   {"centers", centers},
          {"width", r.width},           {"phase", r.phase},
          {"zero_vertices", r.zero_vertices}, {"clamp_radius", r.clamp_radius}};
}

inline LambdaRecipe recipe_from_json(const nlohmann::json& j) {
  LambdaRecipe r;
  r.amplitude = j.at("amplitude").get<double>();
  for (const auto& c : j.at("centers")) r.centers.emplace_back(c.at(0).get<double>(), c.at(1).get<double>(), c.at(2).get<double>());
  r.width = j.at("width").get<double>();
  r.phase = j.value("phase", 0.0);
  r.zero_vertices = j.value("zero_vertices", std::vector<int>{});
  r.clamp_radius = j.at("clamp_radius").get<double>();
  return r;
}

inline std::string mesh_reference(const std::filesystem::path& mesh_path, const std::filesystem::path& bundle_path) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::absolute(bundle_path).parent_path();
  const fs::path rel = fs::absolute(mesh_path).lexically_relative(dir);
  return rel.empty() ? fs::absolute(mesh_path).generic_string() : rel.generic_string();
}

}  // namespace bundle_io_detail

inline nlohmann::json bundle_to_json(const SurfaceBundle& b, const std::string& mesh_ref) {
  nlohmann::json shape = nlohmann::json::array();
  for (const auto& m : b.shape()) shape.push_back({m.a, m.b, m.d});
  nlohmann::json frames = nlohmann::json::array();
  for (const auto& fr : b.frames()) frames.push_back({fr[1].x(), fr[2].x(), fr[2].y()});
  nlohmann::json meta = {{"amplitude", b.meta().amplitude},
                         {"tolerances", bundle_io_detail::tolerances_to_json(b.meta().tolerances)}};
  if (b.meta().recipe) meta["recipe"] = bundle_io_detail::recipe_to_json(*b.meta().recipe);
  if (b.meta().seed) meta["seed"] = *b.meta().seed;
  return {{"mesh", mesh_ref},
          {"edge_lengths", edge_lengths_to_json(b.mesh(), b.g0())},
          {"shape_field", shape},
          {"frames", frames},
          {"kind", to_string(b.kind())},
          {"meta", meta}};
}

/// Rebuilds a bundle on an already loaded mesh. Frames are checked against
/// the layout implied by the edge lengths.
inline SurfaceBundle bundle_from_json(const nlohmann::json& j, std::shared_ptr<const TriMesh> mesh) {
  const TriMesh& m = *mesh;
  DiscreteMetric g0 = edge_lengths_from_json(m, j.at("edge_lengths"));
  const auto& sj = j.at("shape_field");
  if (!sj.is_array() || static_cast<int>(sj.size()) != m.num_faces())
    throw DomainError("shape_field must have one entry per face (" + std::to_string(m.num_faces()) + ")");
  ShapeField shape(m.num_faces());
  for (int f = 0; f < m.num_faces(); ++f) {
    const auto& row = sj[f];
    if (!row.is_array() || row.size() != 3) throw DomainError("shape_field entry " + std::to_string(f) + " is not [a, b, d]");
    shape[f] = {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()};
  }
  BundleMeta meta;
  if (j.contains("meta")) {
    const auto& mj = j["meta"];
    meta.amplitude = mj.value("amplitude", 0.0);
    if (mj.contains("tolerances")) meta.tolerances = bundle_io_detail::tolerances_from_json(mj["tolerances"]);
    if (mj.contains("recipe")) meta.recipe = bundle_io_detail::recipe_from_json(mj["recipe"]);
    if (mj.contains("seed")) meta.seed = mj["seed"].get<std::uint64_t>();
  }
  auto b = SurfaceBundle::assemble(std::move(mesh), std::move(g0), std::move(shape),
                                   bundle_kind_from_string(j.at("kind").get<std::string>()), std::move(meta));
  if (j.contains("frames")) {
    const auto& fj = j["frames"];
    if (!fj.is_array() || static_cast<int>(fj.size()) != m.num_faces())
      throw DomainError("frames must have one entry per face");
    for (int f = 0; f < m.num_faces(); ++f) {
      const auto& fr = b.frames()[f];
      const double scale = fr[1].x();
      const auto& row = fj[f];
      if (!row.is_array() || row.size() != 3) throw DomainError("frames entry " + std::to_string(f) + " is not [x1, x2, y2]");
      const double err = std::max({std::abs(row[0].get<double>() - fr[1].x()), std::abs(row[1].get<double>() - fr[2].x()),
                                   std::abs(row[2].get<double>() - fr[2].y())});
      if (err > 1e-9 * scale)
        throw DomainError("frame of face " + std::to_string(f) + " does not match its edge lengths");
    }
  }
  return b;
}

inline void save_bundle(const std::filesystem::path& path, const SurfaceBundle& b,
                        const std::filesystem::path& mesh_path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write bundle " + path.string());
  out << bundle_to_json(b, bundle_io_detail::mesh_reference(mesh_path, path)).dump() << '\n';
}

inline SurfaceBundle load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open bundle " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("mesh")) throw DomainError(path.string() + ": missing \"mesh\"");
  std::filesystem::path mesh_path = j["mesh"].get<std::string>();
  if (mesh_path.is_relative()) mesh_path = std::filesystem::absolute(path).parent_path() / mesh_path;
  auto mesh = std::make_shared<const TriMesh>(load_mesh(mesh_path));
  try {
    return bundle_from_json(j, std::move(mesh));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

}  // namespace renvol
