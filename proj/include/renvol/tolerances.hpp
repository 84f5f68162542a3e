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

namespace renvol {

/// Library-wide numerical tolerances. Every field must be positive.
struct Tolerances {
  /// Sup-norm of pointwise curvature residual accepted from the conformal solver.
  double solver = 1e-8;
  /// Relative tolerance for exact integral identities (Gauss-Bonnet, dilation).
  double integral = 1e-10;
  /// Relative tolerance for comparing two independent computational routes.
  double cross_validation = 1e-6;
  /// Sup-norm of det A - (kappa0 + 1) accepted for a generated bundle.
  double gauss = 1e-6;
  /// Slack allowed in pointwise curvature comparisons at fixture resolution.
  double mesh_curvature = 1e-3;
  /// Slack for the area bound and inequality-chain margins.
  double inequality = 1e-6;
  /// Relative tolerance of the symbolic finite part against the boundary-term formula.
  double finite_part = 1e-9;
  /// Absolute tolerance of the pole residue against pi chi.
  double pole_residue = 1e-8;

  bool valid() const {
    return solver > 0 && integral > 0 && cross_validation > 0 && gauss > 0 &&
           mesh_curvature > 0 && inequality > 0 && finite_part > 0 && pole_residue > 0;
  }
};

}  // namespace renvol
