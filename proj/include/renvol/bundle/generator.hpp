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

// Bundle generators. Both solve for g0 by prescribing its curvature, then
// attach a shape operator satisfying the Gauss equation face by face.

#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "renvol/bundle/lambda_recipe.hpp"
#include "renvol/bundle/line_field.hpp"
#include "renvol/bundle/surface_bundle.hpp"
#include "renvol/mesh/conformal_solver.hpp"

namespace renvol {

namespace generator_detail {

inline void check_result(const SurfaceBundle& b, const Tolerances& tol) {
  const auto v = validate_bundle(b, tol);
  if (!v.ok()) throw SolverError("generated bundle failed validation: " + v.summary());
}

}  // namespace generator_detail

/// g0 = uniformize(seed, -1), A = 0.
inline SurfaceBundle make_fuchsian(std::shared_ptr<const TriMesh> mesh, const DiscreteMetric& seed_metric,
                                   const Tolerances& tol = {}) {
  SolverOptions opts;
  opts.tolerance = tol.solver;
  auto sol = uniformize(*mesh, seed_metric, -1.0, opts);
  BundleMeta meta;
  meta.tolerances = tol;
  const int nf = mesh->num_faces();
  auto b = SurfaceBundle::assemble(std::move(mesh), std::move(sol.metric), ShapeField(nf), BundleKind::fuchsian,
                                   std::move(meta));
  generator_detail::check_result(b, tol);
  return b;
}

/// Minimal-surface bundle with principal curvatures +-lambda, where lambda is
/// given per vertex by the recipe. g0 has curvature -1 - lambda^2 at each
/// vertex; the face value of lambda is the root mean square of its corners so
/// that det A = kappa0 + 1 holds up to the solver residual. Eigendirections
/// follow the smoothest line field of g0. Its singularities are added to the
/// recipe's zero points, re-solving for g0 until they stay put.
inline SurfaceBundle make_almost_fuchsian(std::shared_ptr<const TriMesh> mesh, const DiscreteMetric& seed_metric,
                                          LambdaRecipe recipe, const Tolerances& tol = {},
                                          std::optional<std::uint64_t> seed = std::nullopt) {
  if (!(recipe.amplitude >= 0.0) || !(recipe.amplitude < 1.0))
    throw DomainError("amplitude must lie in [0, 1), got " + std::to_string(recipe.amplitude));
  const TriMesh& m = *mesh;
  if (recipe.zero_vertices.empty()) recipe.zero_vertices = smoothest_line_field(m, seed_metric).singular_vertices;

  SolverOptions opts;
  opts.tolerance = tol.solver;
  constexpr int max_passes = 6;
  for (int pass = 0;; ++pass) {
    const VertexField lambda = evaluate_lambda(m, recipe);
    VertexField target(m.num_vertices(), 0.0);
    for (int v = 0; v < m.num_vertices(); ++v) target[v] = -1.0 - lambda[v] * lambda[v];
    auto sol = prescribe_curvature(m, seed_metric, target, opts);
    const LineField field = smoothest_line_field(m, sol.metric);

    bool settled = true;
    for (int v : field.singular_vertices) {
      if (std::find(recipe.zero_vertices.begin(), recipe.zero_vertices.end(), v) == recipe.zero_vertices.end()) {
        recipe.zero_vertices.push_back(v);
        settled = false;
      }
    }
    if (!settled) {
      if (pass + 1 >= max_passes)
        throw SolverError("eigendirection singularities did not settle after " + std::to_string(max_passes) +
                          " passes");
      continue;
    }

    ShapeField shape(m.num_faces());
    for (int f = 0; f < m.num_faces(); ++f) {
      double sq = 0;
      for (int v : m.face(f)) sq += lambda[v] * lambda[v];
      const double lf = std::sqrt(sq / 3.0);
      if (lf > 0.0) shape[f] = SymMat2::trace_free(lf, field.direction(f, recipe.phase));
    }
    std::sort(recipe.zero_vertices.begin(), recipe.zero_vertices.end());
    BundleMeta meta;
    meta.amplitude = recipe.amplitude;
    meta.tolerances = tol;
    meta.recipe = recipe;
    meta.seed = seed;
    auto b = SurfaceBundle::assemble(std::move(mesh), std::move(sol.metric), std::move(shape),
                                     BundleKind::almost_fuchsian, std::move(meta));
    generator_detail::check_result(b, tol);
    return b;
  }
}

/// Convenience: default recipe (seed absent) or seeded random recipe.
inline SurfaceBundle make_almost_fuchsian(std::shared_ptr<const TriMesh> mesh, const DiscreteMetric& seed_metric,
                                          double amplitude, std::optional<std::uint64_t> seed = std::nullopt,
                                          const Tolerances& tol = {}) {
  if (!(amplitude >= 0.0) || !(amplitude < 1.0))
    throw DomainError("amplitude must lie in [0, 1), got " + std::to_string(amplitude));
  LambdaRecipe recipe;
  if (seed) {
    recipe = random_recipe(*mesh, amplitude, *seed);
  } else {
    recipe = default_recipe(*mesh, smoothest_line_field(*mesh, seed_metric).singular_vertices, amplitude);
  }
  return make_almost_fuchsian(std::move(mesh), seed_metric, std::move(recipe), tol, seed);
}

}  // namespace renvol
