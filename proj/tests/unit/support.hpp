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

// Shared fixtures for the unit tests. Bundles are built once per process.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>

#include "renvol/bundle/generator.hpp"
#include "renvol/mesh/fixtures.hpp"
#include "renvol/mesh/mesh_io.hpp"

namespace renvol::testing {

inline std::filesystem::path data_dir() { return RENVOL_DATA_DIR; }

inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / "renvol_tests" / name;
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

/// The coarse genus-2 fixture (2112 faces).
inline std::shared_ptr<const TriMesh> genus2() {
  static const auto m = std::make_shared<const TriMesh>(load_mesh(data_dir() / "genus2_coarse.off"));
  return m;
}

inline const DiscreteMetric& genus2_seed() {
  static const DiscreteMetric g = induced_metric(*genus2());
  return g;
}

inline const SurfaceBundle& fuchsian() {
  static const SurfaceBundle b = make_fuchsian(genus2(), genus2_seed());
  return b;
}

/// Default-recipe almost-Fuchsian bundle of amplitude s.
inline const SurfaceBundle& almost_fuchsian(double s) {
  static std::map<double, SurfaceBundle> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, make_almost_fuchsian(genus2(), genus2_seed(), s)).first;
  return it->second;
}

/// Copy of `b` with the shape field replaced.
inline SurfaceBundle with_shape(const SurfaceBundle& b, ShapeField shape, BundleKind kind = BundleKind::custom) {
  return SurfaceBundle::assemble(b.mesh_ptr(), b.g0(), std::move(shape), kind, b.meta());
}

}  // namespace renvol::testing
