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

// Scalar recipe for the principal curvature magnitude lambda of a generated
// minimal-surface bundle: a sum of Gaussian bumps in embedding coordinates,
// faded to zero near the singularities of the eigendirection line field, then
// normalized so that its supremum over the vertices is the amplitude.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "renvol/error.hpp"
#include "renvol/mesh/fields.hpp"
#include "renvol/mesh/tri_mesh.hpp"

namespace renvol {

struct LambdaRecipe {
  double amplitude = 0.0;
  std::vector<Vec3> centers;
  double width = 1.0;
  /// Global rotation (radians) applied to the eigendirection line field.
  double phase = 0.0;
  /// Designated zero points: lambda fades to zero within clamp_radius
  /// (embedding distance) of each. The generator adds the singularities of
  /// the eigendirection field here.
  std::vector<int> zero_vertices;
  double clamp_radius = 1.0;
};

namespace recipe_detail {

/// C2 ramp from 0 at x <= 0 to 1 at x >= 1.
inline double smootherstep(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return x * x * x * (x * (6.0 * x - 15.0) + 10.0);
}

/// SplitMix64; portable and deterministic across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal() {
    const double u1 = 1.0 - uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::uint64_t state_;
};

inline std::pair<Vec3, Vec3> bounding_box(const std::vector<Vec3>& p) {
  Vec3 lo = p.front(), hi = p.front();
  for (const auto& q : p) {
    lo = lo.cwiseMin(q);
    hi = hi.cwiseMax(q);
  }
  return {lo, hi};
}

}  // namespace recipe_detail

/// Euclidean distance from each vertex to the nearest listed vertex
/// (infinity when the list is empty).
inline VertexField distance_to(const TriMesh& mesh, const std::vector<int>& sources) {
  VertexField d(mesh.num_vertices(), std::numeric_limits<double>::infinity());
  const auto& p = mesh.positions();
  for (int v = 0; v < mesh.num_vertices(); ++v)
    for (int s : sources) d[v] = std::min(d[v], (p[v] - p[s]).norm());
  return d;
}

/// Deterministic default: one wide bump centred on the vertex farthest from
/// the given zero points, which are kept in the recipe.
inline LambdaRecipe default_recipe(const TriMesh& mesh, const std::vector<int>& zero_vertices, double amplitude) {
  if (!mesh.has_positions()) throw MetricError("default_recipe: mesh has no embedding coordinates");
  LambdaRecipe r;
  r.amplitude = amplitude;
  const auto [lo, hi] = recipe_detail::bounding_box(mesh.positions());
  const double diag = (hi - lo).norm();
  r.width = 0.3 * diag;
  r.clamp_radius = 0.15 * diag;
  r.zero_vertices = zero_vertices;
  const auto dist = distance_to(mesh, zero_vertices);
  int best = 0;
  for (int v = 1; v < mesh.num_vertices(); ++v)
    if (dist[v] > dist[best]) best = v;
  r.centers = {mesh.positions()[best]};
  return r;
}

/// Seeded random recipe: 1-3 bumps at random vertices, a random width and a
/// random rotation of the line field.
inline LambdaRecipe random_recipe(const TriMesh& mesh, double amplitude, std::uint64_t seed) {
  if (!mesh.has_positions()) throw MetricError("random_recipe: mesh has no embedding coordinates");
  recipe_detail::SplitMix64 rng(seed);
  LambdaRecipe r;
  r.amplitude = amplitude;
  const auto [lo, hi] = recipe_detail::bounding_box(mesh.positions());
  const double diag = (hi - lo).norm();
  const int count = 1 + static_cast<int>(rng.next() % 3);
  for (int i = 0; i < count; ++i) {
    const int v = static_cast<int>(rng.next() % static_cast<std::uint64_t>(mesh.num_vertices()));
    r.centers.push_back(mesh.positions()[v]);
  }
  r.width = rng.uniform(0.2, 0.45) * diag;
  r.clamp_radius = 0.15 * diag;
  r.phase = rng.uniform(0.0, 3.14159265358979323846);
  return r;
}

/// lambda per vertex. The supremum over vertices equals the amplitude unless
/// the fade removes the bumps entirely, in which case lambda is zero.
inline VertexField evaluate_lambda(const TriMesh& mesh, const LambdaRecipe& recipe) {
  if (!(recipe.amplitude >= 0.0) || !(recipe.amplitude < 1.0))
    throw DomainError("lambda amplitude must lie in [0, 1), got " + std::to_string(recipe.amplitude));
  VertexField lambda(mesh.num_vertices(), 0.0);
  if (recipe.amplitude == 0.0 || recipe.centers.empty()) return lambda;
  const auto& p = mesh.positions();
  const auto dist = distance_to(mesh, recipe.zero_vertices);
  const double inv2w2 = 1.0 / (2.0 * recipe.width * recipe.width);
  double peak = 0;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    double bump = 0;
    for (const auto& c : recipe.centers) bump += std::exp(-(p[v] - c).squaredNorm() * inv2w2);
    lambda[v] = bump * recipe_detail::smootherstep(dist[v] / recipe.clamp_radius);
    peak = std::max(peak, lambda[v]);
  }
  if (peak <= 0) return VertexField(mesh.num_vertices(), 0.0);
  for (auto& l : lambda.values) l *= recipe.amplitude / peak;
  return lambda;
}

}  // namespace renvol
