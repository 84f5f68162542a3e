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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numbers>
#include <string>

#include "renvol/bundle/bundle_io.hpp"
#include "renvol/bundle/generator.hpp"
#include "renvol/bundle/line_field.hpp"
#include "support.hpp"

namespace renvol {
namespace {

TEST(SymMat2, TraceFreeConstruction) {
  const auto m = SymMat2::trace_free(0.5, Vec2(std::cos(0.3), std::sin(0.3)));
  EXPECT_NEAR(m.trace(), 0.0, 1e-16);
  EXPECT_NEAR(m.det(), -0.25, 1e-15);
  const auto [l1, l2] = m.eigenvalues();
  EXPECT_NEAR(l1, 0.5, 1e-15);
  EXPECT_NEAR(l2, -0.5, 1e-15);
  EXPECT_NEAR(m.quadratic(Vec2(std::cos(0.3), std::sin(0.3))), 0.5, 1e-15);
}

TEST(SymMat2, DiagonalEigenvalues) {
  const SymMat2 d{0.5, 0, -0.5};
  EXPECT_EQ(d.eigenvalues(), std::make_pair(0.5, -0.5));
  EXPECT_EQ(SymMat2::zero().eigenvalues(), std::make_pair(0.0, 0.0));
}

TEST(LambdaRecipe, SupremumEqualsAmplitude) {
  const auto& m = *testing::genus2();
  const auto r = default_recipe(m, {}, 0.5);
  const auto l = evaluate_lambda(m, r);
  EXPECT_DOUBLE_EQ(l.max(), 0.5);
  EXPECT_GE(l.min(), 0.0);
}

TEST(LambdaRecipe, VanishesNearZeroPoints) {
  const auto& m = *testing::genus2();
  const auto r = default_recipe(m, {0, 17}, 0.6);
  const auto l = evaluate_lambda(m, r);
  EXPECT_EQ(l[0], 0.0);
  EXPECT_EQ(l[17], 0.0);
  const auto dist = distance_to(m, r.zero_vertices);
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (dist[v] < 0.3 * r.clamp_radius) {
      EXPECT_LT(l[v], 0.6 * 0.2);
    }
  }
}

TEST(LambdaRecipe, AmplitudeOutOfRangeRejected) {
  const auto& m = *testing::genus2();
  auto r = default_recipe(m, {}, 0.5);
  r.amplitude = 1.0;
  EXPECT_THROW(evaluate_lambda(m, r), DomainError);
  r.amplitude = -0.1;
  EXPECT_THROW(evaluate_lambda(m, r), DomainError);
}

TEST(LambdaRecipe, RandomRecipeIsSeeded) {
  const auto& m = *testing::genus2();
  const auto a = random_recipe(m, 0.4, 7), b = random_recipe(m, 0.4, 7), c = random_recipe(m, 0.4, 8);
  EXPECT_EQ(evaluate_lambda(m, a), evaluate_lambda(m, b));
  EXPECT_NE(evaluate_lambda(m, a), evaluate_lambda(m, c));
}

TEST(LineField, SingularIndicesSumToChi) {
  const auto& m = *testing::genus2();
  const auto f = smoothest_line_field(m, testing::genus2_seed());
  double total = 0;
  for (double i : f.singular_indices) total += i;
  EXPECT_DOUBLE_EQ(total, m.euler_characteristic());
  ASSERT_EQ(f.singular_vertices.size(), f.singular_indices.size());
  for (int face = 0; face < m.num_faces(); ++face) EXPECT_NEAR(std::abs(f.z[face]), 1.0, 1e-12);
}

TEST(MakeFuchsian, AreaAndZeroShape) {
  const auto& b = testing::fuchsian();
  EXPECT_NEAR(b.area(), 4 * std::numbers::pi, 1e-7);
  for (const auto& [l1, l2] : principal_curvatures(b)) {
    EXPECT_EQ(l1, 0.0);
    EXPECT_EQ(l2, 0.0);
  }
  EXPECT_LE(gauss_residual(b).sup, 1e-6);
  EXPECT_EQ(b.kind(), BundleKind::fuchsian);
}

TEST(MakeAlmostFuchsian, ZeroAmplitudeMatchesFuchsian) {
  const auto b = make_almost_fuchsian(testing::genus2(), testing::genus2_seed(), 0.0);
  const auto& f = testing::fuchsian();
  for (int e = 0; e < b.mesh().num_edges(); ++e) EXPECT_NEAR(b.g0().length(e), f.g0().length(e), 1e-8);
  EXPECT_EQ(b.shape(), f.shape());
  for (double k : b.kappa0().values) EXPECT_NEAR(k, -1.0, 1e-8);
}

TEST(MakeAlmostFuchsian, HalfAmplitudeProperties) {
  const auto& b = testing::almost_fuchsian(0.5);
  for (double k : b.kappa0().values) {
    EXPECT_GE(k, -1.25 - 1e-8);
    EXPECT_LE(k, -1.0 + 1e-8);
  }
  double sup = 0;
  for (int f = 0; f < b.mesh().num_faces(); ++f) {
    const auto& a = b.shape(f);
    EXPECT_EQ(a.trace(), 0.0);
    const double l = a.eigenvalues().first;
    EXPECT_NEAR(a.det() + l * l, 0.0, 1e-15);
    sup = std::max(sup, l);
  }
  EXPECT_LE(gauss_residual(b).sup, 1e-6);
  // Face values are root mean squares of the vertex recipe (peak 0.5).
  EXPECT_LE(sup, 0.5);
  EXPECT_GE(sup, 0.49);
  EXPECT_LT(sup_principal_curvature(b), 1.0);
}

TEST(MakeAlmostFuchsian, DeterministicForSeed) {
  const auto a = make_almost_fuchsian(testing::genus2(), testing::genus2_seed(), 0.3, 11u);
  const auto b = make_almost_fuchsian(testing::genus2(), testing::genus2_seed(), 0.3, 11u);
  EXPECT_EQ(a.g0(), b.g0());
  EXPECT_EQ(a.shape(), b.shape());
  ASSERT_TRUE(a.meta().seed);
  EXPECT_EQ(*a.meta().seed, 11u);
}

TEST(MakeAlmostFuchsian, RejectsBadInput) {
  EXPECT_THROW(make_almost_fuchsian(testing::genus2(), testing::genus2_seed(), 1.2), DomainError);
  auto torus = std::make_shared<const TriMesh>(fixtures::torus());
  EXPECT_THROW(make_fuchsian(torus, induced_metric(*torus)), DomainError);
}

TEST(GaussResidual, IdentityShapeGivesMinusKappa) {
  const auto& f = testing::fuchsian();
  const auto b = testing::with_shape(f, ShapeField(f.mesh().num_faces(), SymMat2::identity()));
  for (int face = 0; face < b.mesh().num_faces(); ++face)
    EXPECT_NEAR(b.gauss_residual()[face], -b.kappa0()[face], 1e-15);
}

TEST(Codazzi, ZeroForZeroShape) { EXPECT_EQ(codazzi_residual(testing::fuchsian()).sup, 0.0); }

TEST(Codazzi, ParallelTensorSmallerThanRoughField) {
  const auto& f = testing::fuchsian();
  const auto iso = testing::with_shape(f, ShapeField(f.mesh().num_faces(), SymMat2::identity(0.3)));
  EXPECT_LE(codazzi_residual(iso).sup, 1e-12);
  ShapeField rough(f.mesh().num_faces());
  for (int face = 0; face < f.mesh().num_faces(); ++face) {
    const double a = 0.5 * std::sin(7.3 * face);
    rough[face] = SymMat2::trace_free(0.4, Vec2(std::cos(a * 10), std::sin(a * 10)));
  }
  EXPECT_GT(codazzi_residual(testing::with_shape(f, rough)).mean, 0.1);
}

TEST(Validate, SummaryFlagsFailures) {
  const auto& f = testing::fuchsian();
  const auto bad = testing::with_shape(f, ShapeField(f.mesh().num_faces(), SymMat2{1.5, 0, -1.5}));
  const auto v = validate_bundle(bad, Tolerances{});
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(v.principal_ok);
  EXPECT_FALSE(v.gauss_ok);
  EXPECT_NE(v.summary().find("FAIL"), std::string::npos);
  EXPECT_TRUE(validate_bundle(f, Tolerances{}).ok());
}

TEST(BundleIo, RoundTripIsBitIdentical) {
  const auto dir = testing::scratch_dir("bundle_io");
  const auto& b = testing::almost_fuchsian(0.5);
  save_bundle(dir / "b.json", b, testing::data_dir() / "genus2_coarse.off");
  const auto back = load_bundle(dir / "b.json");
  EXPECT_EQ(back.g0(), b.g0());
  EXPECT_EQ(back.shape(), b.shape());
  EXPECT_EQ(back.kind(), b.kind());
  EXPECT_EQ(back.meta().amplitude, b.meta().amplitude);
  ASSERT_TRUE(back.meta().recipe);
  EXPECT_EQ(back.meta().recipe->zero_vertices, b.meta().recipe->zero_vertices);
  EXPECT_EQ(back.mesh().faces(), b.mesh().faces());
  // Saving the reloaded bundle reproduces the file byte for byte.
  save_bundle(dir / "c.json", back, testing::data_dir() / "genus2_coarse.off");
  std::ifstream a(dir / "b.json"), c(dir / "c.json");
  const std::string sa((std::istreambuf_iterator<char>(a)), {}), sc((std::istreambuf_iterator<char>(c)), {});
  EXPECT_EQ(sa, sc);
}

TEST(BundleIo, CorruptFramesAndShapesRejected) {
  const auto& b = testing::fuchsian();
  auto j = bundle_to_json(b, "unused");
  auto frames = j;
  frames["frames"][5][2] = frames["frames"][5][2].get<double>() * 1.01;
  EXPECT_THROW(bundle_from_json(frames, b.mesh_ptr()), DomainError);
  auto shapes = j;
  shapes["shape_field"].erase(shapes["shape_field"].begin());
  EXPECT_THROW(bundle_from_json(shapes, b.mesh_ptr()), DomainError);
  auto kind = j;
  kind["kind"] = "hyperbolic";
  EXPECT_THROW(bundle_from_json(kind, b.mesh_ptr()), DomainError);
}

}  // namespace
}  // namespace renvol
