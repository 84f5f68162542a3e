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

// Riesz finite part of the funnel volume of one end beyond leaf t,
//   I(z) = int_{x >= t} e^{-z x} dg,
// which on every face is a sum of three exponential modes in x:
//   I(z) = a e^{(2-z)t}/(z-2) + b e^{-(2+z)t}/(z+2) - c e^{-zt}/z.
// Its finite part at z = 0 is -a e^{2t}/2 + b e^{-2t}/2 + c t. The Laurent
// coefficient of 1/z is -c; c itself, the integral of kappa_t / 2 over the
// leaf, is what we report as the pole residue.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "renvol/foliation/foliation.hpp"

namespace renvol {

struct FinitePartResult {
  double t = 0;
  End end = End::plus;
  double fp = 0;
  double pole_residue = 0;
  /// (a, b, c): coefficients of the e^{(2-z)x}, e^{-(2+z)x} and e^{-zx} modes.
  std::array<double, 3> growth_coeffs{};
  /// Numeric path only: max |fit - I| / max |I| and the condition number of
  /// the column-scaled design matrix.
  double fit_residual = 0;
  double condition_number = 1;
};

/// Mode coefficients read off leaf t:
/// P = kappa_t/4 + 1/2 + H_t/4, M = kappa_t/4 + 1/2 - H_t/4, C = -kappa_t/2.
inline FinitePartResult riesz_fp_symbolic(const SurfaceBundle& bundle, double t, End end) {
  const auto leaf = sample_leaf(bundle, t, end);
  const auto& area = bundle.face_areas();
  double p = 0, m = 0, half_kappa = 0;
  for (std::size_t f = 0; f < area.size(); ++f) {
    const double w = area[f] * leaf.area_density[f];
    const double k = leaf.curvature[f], h = leaf.mean_curvature[f];
    p += w * (0.25 * k + 0.5 + 0.25 * h);
    m += w * (0.25 * k + 0.5 - 0.25 * h);
    half_kappa += w * 0.5 * k;
  }
  FinitePartResult r;
  r.t = t;
  r.end = end;
  r.fp = -0.5 * p + 0.5 * m + t * half_kappa;
  r.pole_residue = half_kappa;
  r.growth_coeffs = {p * std::exp(-2 * t), m * std::exp(2 * t), half_kappa};
  return r;
}

/// I(z) for z > 2, from the g0 data and the closed-form x-integral of each mode.
inline double funnel_integral(const SurfaceBundle& bundle, double t, End end, double z) {
  if (!(z > 2)) throw DomainError("funnel integral converges only for z > 2");
  const auto& area = bundle.face_areas();
  const double ep = std::exp((2 - z) * t) / (z - 2);
  const double em = std::exp(-(2 + z) * t) / (z + 2);
  const double e0 = std::exp(-z * t) / z;
  double sum = 0;
  for (std::size_t f = 0; f < area.size(); ++f) {
    const auto a = foliation_detail::end_shape(bundle, static_cast<int>(f), end);
    const double d = a.det(), h = a.trace();
    sum += area[f] * (0.25 * (1 + d + h) * ep + 0.25 * (1 + d - h) * em + 0.5 * (1 - d) * e0);
  }
  return sum;
}

struct FitOptions {
  double max_condition = 1e10;
};

/// Least-squares fit of I(z) over z_grid to the three-mode model, then
/// continuation to z = 0.
inline FinitePartResult riesz_fp_numeric(const SurfaceBundle& bundle, double t, End end,
                                         const std::vector<double>& z_grid, const FitOptions& opts = {}) {
  if (z_grid.size() < 6) throw DomainError("z grid needs at least 6 points");
  for (double z : z_grid)
    if (!(z > 2)) throw DomainError("z grid points must exceed 2, got " + std::to_string(z));
  const int n = static_cast<int>(z_grid.size());
  Eigen::MatrixXd phi(n, 3);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    const double z = z_grid[i];
    phi(i, 0) = std::exp((2 - z) * t) / (z - 2);
    phi(i, 1) = std::exp(-(2 + z) * t) / (z + 2);
    phi(i, 2) = -std::exp(-z * t) / z;
    rhs(i) = funnel_integral(bundle, t, end, z);
  }
  const Eigen::Vector3d scale = phi.colwise().norm().transpose();
  const Eigen::MatrixXd scaled = phi * scale.cwiseInverse().asDiagonal();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  FinitePartResult r;
  r.t = t;
  r.end = end;
  r.condition_number = sv(0) / sv(sv.size() - 1);
  if (!(r.condition_number < opts.max_condition))
    throw SolverError("finite-part fit is ill-conditioned (condition number " + std::to_string(r.condition_number) +
                      "); widen the z grid");
  const Eigen::Vector3d coef = (svd.solve(rhs).array() / scale.array()).matrix();
  r.growth_coeffs = {coef(0), coef(1), coef(2)};
  r.fp = -0.5 * coef(0) * std::exp(2 * t) + 0.5 * coef(1) * std::exp(-2 * t) + coef(2) * t;
  r.pole_residue = coef(2);
  r.fit_residual = (phi * coef - rhs).cwiseAbs().maxCoeff() / rhs.cwiseAbs().maxCoeff();
  return r;
}

}  // namespace renvol
