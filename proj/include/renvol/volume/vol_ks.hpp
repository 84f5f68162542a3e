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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "renvol/foliation/foliation.hpp"

namespace renvol {

/// Vol([-t, t] x Sigma), integrated in closed form in the normal direction.
inline double compact_volume(const SurfaceBundle& bundle, double t, DensityForm form = DensityForm::det) {
  if (!(t >= 0)) throw DomainError("compact_volume needs t >= 0");
  const double half_s2 = 0.5 * std::sinh(2 * t);
  const double cosh2 = t + half_s2;   // int_{-t}^{t} cosh^2
  const double sinh2 = -t + half_s2;  // int_{-t}^{t} sinh^2
  const auto& area = bundle.face_areas();
  double vol = 0;
  for (std::size_t f = 0; f < area.size(); ++f)
    vol += area[f] * (cosh2 + foliation_detail::gauss_term(bundle, static_cast<int>(f), form) * sinh2);
  return vol;
}

/// Integral over leaf t of H^t dg_t for one end.
inline double mean_curvature_integral(const SurfaceBundle& bundle, double t, End end,
                                      DensityForm form = DensityForm::det) {
  const auto hd = mean_curvature_density(bundle, t, end, form);
  return integrate_scalar(bundle.mesh(), bundle.g0(), hd);
}

/// Vol(K_t) - 1/4 sum_ends int H^t dg_t + t pi chi(Sigma), chi(Sigma) = 2 chi(mesh)
/// for the two boundary components.
inline double vol_ks(const SurfaceBundle& bundle, double t, DensityForm form = DensityForm::det) {
  double boundary = 0;
  for (End e : kEnds) boundary += mean_curvature_integral(bundle, t, e, form);
  return compact_volume(bundle, t, form) - 0.25 * boundary +
         t * std::numbers::pi * 2.0 * bundle.euler_characteristic();
}

struct VolKsSweep {
  std::vector<double> t;
  std::vector<double> value;
  double spread = 0;
};

inline VolKsSweep vol_ks_sweep(const SurfaceBundle& bundle, const std::vector<double>& grid,
                               DensityForm form = DensityForm::det) {
  VolKsSweep s;
  s.t = grid;
  for (double t : grid) s.value.push_back(vol_ks(bundle, t, form));
  if (!s.value.empty())
    s.spread = *std::max_element(s.value.begin(), s.value.end()) - *std::min_element(s.value.begin(), s.value.end());
  return s;
}

}  // namespace renvol
