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

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "renvol/bundle/surface_bundle.hpp"
#include "renvol/error.hpp"
#include "renvol/tolerances.hpp"
#include "renvol/volume/canonical.hpp"

namespace renvol::cli {

enum class Command { gen, volr, sweep, uniformize, check };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::gen: return "gen";
    case Command::volr: return "volr";
    case Command::sweep: return "sweep";
    case Command::uniformize: return "uniformize";
    case Command::check: return "check";
  }
  return "";
}

/// Exit codes: success, an asserted verdict failed, bad input or an error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  Command command = Command::check;
  std::vector<std::filesystem::path> meshes;
  std::optional<std::filesystem::path> bundle;
  /// Metric overlay replacing the embedding-induced lengths.
  std::optional<std::filesystem::path> metric;
  std::optional<BundleKind> kind;
  double amplitude = 0.0;
  std::vector<double> t_grid = default_t_grid();
  std::vector<double> z_grid = default_z_grid();
  Tolerances tolerances;
  /// Whether tolerances were set explicitly; otherwise a bundle's own are used.
  bool tolerances_given = false;
  std::filesystem::path out = ".";
  std::optional<std::uint64_t> seed;
  /// uniformize: target curvature.
  double target = -4.0;
  /// sweep: "t", "z" or "both".
  std::string axis = "both";
  /// check: random bundles and maximality perturbations.
  int count = 20;
  int perturbations = 50;

  /// Throws DomainError on the first violated invariant.
  void validate() const {
    if (!tolerances.valid()) throw DomainError("tolerances must be positive");
    if (!(amplitude >= 0.0) || !(amplitude < 1.0))
      throw DomainError("amplitude must lie in [0, 1), got " + std::to_string(amplitude));
    if (t_grid.empty()) throw DomainError("t grid is empty");
    if (z_grid.empty()) throw DomainError("z grid is empty");
    for (double t : t_grid)
      if (!(t >= 0) || !std::isfinite(t)) throw DomainError("t grid values must be finite and >= 0");
    for (double z : z_grid)
      if (!(z > 2) || !std::isfinite(z)) throw DomainError("z grid values must be finite and > 2");
    if (z_grid.size() < 6) throw DomainError("z grid needs at least 6 points");
    if (axis != "t" && axis != "z" && axis != "both") throw DomainError("axis must be t, z or both");
    if (count < 0 || perturbations < 0) throw DomainError("counts must be non-negative");
  }
};

/// "solver=1e-9" sets the named tolerance.
inline void apply_tolerance_override(Tolerances& tol, const std::string& item) {
  const std::size_t eq = item.find('=');
  if (eq == std::string::npos) throw DomainError("tolerance override '" + item + "' is not key=value");
  const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || *end != '\0') throw DomainError("tolerance '" + key + "' has a non-numeric value '" + value + "'");
  if (key == "solver") tol.solver = v;
  else if (key == "integral") tol.integral = v;
  else if (key == "cross_validation") tol.cross_validation = v;
  else if (key == "gauss") tol.gauss = v;
  else if (key == "mesh_curvature") tol.mesh_curvature = v;
  else if (key == "inequality") tol.inequality = v;
  else if (key == "finite_part") tol.finite_part = v;
  else if (key == "pole_residue") tol.pole_residue = v;
  else throw DomainError("unknown tolerance '" + key + "'");
}

}  // namespace renvol::cli
