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

#include <cmath>
#include <numbers>

#include "renvol/mesh/curvature.hpp"
#include "renvol/mesh/fixtures.hpp"
#include "renvol/mesh/metric.hpp"
#include "support.hpp"

namespace renvol {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Metric, UnitTetrahedronLengths) {
  const auto m = fixtures::tetrahedron();
  const auto g = induced_metric(m);
  for (double l : g.lengths()) EXPECT_NEAR(l, 1.0, 1e-15);
}

TEST(Metric, ScaledEmbeddingDoublesLengths) {
  const auto m = fixtures::genus2(1);
  std::vector<Vec3> p2;
  for (const auto& p : m.positions()) p2.push_back(2.0 * p);
  const auto g = induced_metric(m), g2 = induced_metric(m.with_positions(p2));
  for (int e = 0; e < m.num_edges(); ++e) EXPECT_DOUBLE_EQ(g2.length(e), 2.0 * g.length(e));
}

TEST(Metric, Genus2FaceAreasPositive) {
  const auto& g = testing::genus2_seed();
  for (double a : g.face_areas(*testing::genus2())) EXPECT_GT(a, 0.0);
}

TEST(Metric, TriangleInequalityViolationNamesFace) {
  const auto m = fixtures::tetrahedron();
  std::vector<double> len(m.num_edges(), 1.0);
  len[m.face_edge(2, 0)] = 2.5;
  try {
    DiscreteMetric::validated(m, len);
    FAIL();
  } catch (const MetricError& e) {
    EXPECT_GE(e.face(), 0);
  }
  EXPECT_THROW(DiscreteMetric::validated(m, std::vector<double>(5, 1.0)), MetricError);
  len.assign(m.num_edges(), 1.0);
  len[0] = -1;
  EXPECT_THROW(DiscreteMetric::validated(m, len), MetricError);
}

TEST(Metric, NeedleTriangleAreaAccurate) {
  // Heron in naive form loses everything here.
  const TriangleLengths l{1.0, 1.0, 1e-9};
  EXPECT_NEAR(triangle_area(l), 0.5e-9, 1e-24);
}

TEST(Curvature, TetrahedronDefects) {
  const auto m = fixtures::tetrahedron();
  const auto k = vertex_curvature(m, induced_metric(m));
  for (double d : k.defect) EXPECT_NEAR(d, kPi, 1e-14);
  EXPECT_NEAR(k.total_defect(), 4 * kPi, 1e-13);
}

TEST(Curvature, GaussBonnetGenus2) {
  const auto k = vertex_curvature(*testing::genus2(), testing::genus2_seed());
  EXPECT_NEAR(k.total_defect(), -4 * kPi, 1e-10);
  const auto fine = load_mesh(testing::data_dir() / "genus2_fine.off");
  EXPECT_NEAR(vertex_curvature(fine, induced_metric(fine)).total_defect(), -4 * kPi, 1e-10);
}

TEST(Curvature, FlatTorusDefectsVanish) {
  const auto m = fixtures::flat_torus(8);
  const auto k = vertex_curvature(m, fixtures::flat_torus_metric(m, 8));
  for (double d : k.defect) EXPECT_NEAR(d, 0.0, 1e-13);
}

TEST(Curvature, EmbeddedTorusGaussBonnet) {
  const auto m = fixtures::torus();
  EXPECT_NEAR(vertex_curvature(m, induced_metric(m)).total_defect(), 0.0, 1e-10);
}

TEST(Integrate, ConstantsAndCurvature) {
  const auto& m = *testing::genus2();
  const auto& g = testing::genus2_seed();
  const double area = g.total_area(m);
  EXPECT_NEAR(integrate_scalar(m, g, VertexField(m.num_vertices(), 1.0)), area, 1e-12 * area);
  EXPECT_NEAR(integrate_scalar(m, g, VertexField(m.num_vertices(), 3.5)), 3.5 * area, 1e-12 * area);
  EXPECT_NEAR(integrate_scalar(m, g, FaceField(m.num_faces(), 2.0)), 2 * area, 1e-12 * area);
  EXPECT_NEAR(integrate_scalar(m, g, vertex_curvature(m, g).pointwise()), -4 * kPi, 1e-10);
}

TEST(Dirichlet, ConstantAndHomogeneity) {
  const auto& m = *testing::genus2();
  const auto& g = testing::genus2_seed();
  EXPECT_NEAR(dirichlet_energy(m, g, VertexField(m.num_vertices(), 2.0)), 0.0, 1e-12);
  VertexField w(m.num_vertices(), 0.0);
  for (int v = 0; v < m.num_vertices(); ++v) w[v] = std::sin(m.positions()[v].x()) + m.positions()[v].z();
  const double e1 = dirichlet_energy(m, g, w), e2 = dirichlet_energy(m, g, w * 2.0);
  EXPECT_NEAR(e2, 4 * e1, 1e-12 * e2);
}

TEST(Dirichlet, SinusoidOnFlatTorus) {
  // A linear function is not periodic; sin(2 pi x) has energy (2 pi)^2 / 2 on the unit torus.
  for (int n : {16, 32}) {
    const auto m = fixtures::flat_torus(n);
    const auto g = fixtures::flat_torus_metric(m, n);
    VertexField w(m.num_vertices(), 0.0);
    for (int v = 0; v < m.num_vertices(); ++v) w[v] = std::sin(2 * kPi * (v / n) / n);
    const double exact = 2 * kPi * kPi;
    EXPECT_NEAR(dirichlet_energy(m, g, w), exact, 0.05 * exact * 16.0 / n) << "n = " << n;
  }
}

TEST(Dirichlet, NonNegativeWithoutObtuseFaces) {
  const auto m = fixtures::flat_torus(10);
  const auto g = fixtures::flat_torus_metric(m, 10);
  ASSERT_EQ(count_obtuse_faces(m, g), 0);
  VertexField w(m.num_vertices(), 0.0);
  for (int v = 0; v < m.num_vertices(); ++v) w[v] = std::cos(1.7 * v) - 0.3 * (v % 7);
  EXPECT_GE(dirichlet_energy(m, g, w), 0.0);
}

TEST(ConformalScale, IdentityAndConstant) {
  const auto& m = *testing::genus2();
  const auto& g = testing::genus2_seed();
  EXPECT_EQ(conformal_scale(m, g, VertexField(m.num_vertices(), 0.0)), g);
  const double c = 1.7;
  const auto gc = conformal_scale(m, g, VertexField(m.num_vertices(), std::log(c)));
  for (int e = 0; e < m.num_edges(); ++e) EXPECT_NEAR(gc.length(e), c * g.length(e), 1e-14 * c * g.length(e));
  EXPECT_NEAR(gc.total_area(m), c * c * g.total_area(m), 1e-12 * gc.total_area(m));
  const auto k = vertex_curvature(m, g).pointwise(), kc = vertex_curvature(m, gc).pointwise();
  for (int v = 0; v < m.num_vertices(); ++v) EXPECT_NEAR(kc[v], k[v] / (c * c), 1e-10 * std::abs(k[v]) + 1e-12);
}

TEST(ConformalScale, TriangleInequalityFailureThrows) {
  const auto m = fixtures::tetrahedron();
  VertexField w(4, 0.0);
  w[0] = 8.0;
  w[1] = 8.0;
  EXPECT_THROW(conformal_scale(m, induced_metric(m), w), MetricError);
}

TEST(HodgeSplit, ConstantMeanZeroAndRandom) {
  const auto& m = *testing::genus2();
  const auto& g = testing::genus2_seed();
  const auto h5 = hodge_split(m, g, VertexField(m.num_vertices(), 5.0));
  EXPECT_NEAR(h5.constant, 5.0, 1e-13);
  EXPECT_NEAR(h5.perp.sup_norm(), 0.0, 1e-13);

  VertexField w(m.num_vertices(), 0.0);
  for (int v = 0; v < m.num_vertices(); ++v) w[v] = std::sin(3.1 * v) + 0.25;
  const auto h = hodge_split(m, g, w);
  const double area = g.total_area(m);
  EXPECT_NEAR(integrate_scalar(m, g, h.perp), 0.0, 1e-12 * area);
  EXPECT_NEAR(hodge_split(m, g, h.perp).constant, 0.0, 1e-14);
}

}  // namespace
}  // namespace renvol
