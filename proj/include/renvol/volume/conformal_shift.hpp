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
#include <numbers>
#include <string>

#include "renvol/mesh/curvature.hpp"

namespace renvol {

/// Change of renormalized volume when the boundary metric h is replaced by
/// e^{2 omega} h: -1/4 (int |d omega|^2 dh + 2 int kappa_h omega dh).
inline double conformal_volume_shift(const TriMesh& mesh, const DiscreteMetric& h, const VertexField& omega) {
  const auto k = vertex_curvature(mesh, h);
  double linear = 0;
  for (int v = 0; v < mesh.num_vertices(); ++v) linear += k.defect[v] * omega[v];
  return -0.25 * (dirichlet_energy(mesh, h, omega) + 2.0 * linear);
}

/// Vol_R(c^2 h) - Vol_R(h) = -pi chi ln c.
inline double dilation_shift(int chi, double c) {
  if (!(c > 0)) throw DomainError("dilation factor must be positive, got " + std::to_string(c));
  return -std::numbers::pi * chi * std::log(c);
}

/// Shifts omega by a constant so that int e^{2 omega} dh equals area(h).
inline VertexField area_renormalized(const TriMesh& mesh, const DiscreteMetric& h, const VertexField& omega) {
  const auto dual = dual_areas(mesh, h);
  double scaled = 0, area = 0;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    scaled += dual[v] * std::exp(2 * omega[v]);
    area += dual[v];
  }
  return omega + (-0.5 * std::log(scaled / area));
}

}  // namespace renvol
