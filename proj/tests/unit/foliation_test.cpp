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

#include "renvol/foliation/foliation.hpp"
#include "support.hpp"

namespace renvol {
namespace {

constexpr double kPi = std::numbers::pi;

// Fuchsian g0 with the constant shape operator diag(l, -l) on every face.
SurfaceBundle split_shape(double l) {
  const auto& f = testing::fuchsian();
  return testing::with_shape(f, ShapeField(f.mesh().num_faces(), SymMat2{l, 0, -l}));
}

// Leaf t principal curvature for a surface principal curvature k.
double leaf_principal(double k, double t) {
  return (std::sinh(t) + k * std::cosh(t)) / (std::cosh(t) + k * std::sinh(t));
}

TEST(AreaDensity, FuchsianIsCoshSquared) {
  const auto d = area_density(testing::fuchsian(), 1.0);
  for (double x : d.values) EXPECT_NEAR(x, std::cosh(1.0) * std::cosh(1.0), 1e-12);
  EXPECT_NEAR(d[0], 2.3810978455418157, 1e-12);
}

TEST(AreaDensity, SplitShapeClosedForm) {
  const auto b = split_shape(0.5);
  const double c = std::cosh(1.0), s = std::sinh(1.0);
  for (End e : kEnds) {
    const auto d = area_density(b, 1.0, e);
    for (double x : d.values) EXPECT_NEAR(x, c * c - 0.25 * s * s, 1e-12);
  }
  EXPECT_NEAR(area_density(b, 1.0)[0], 2.0358, 1e-4);
}

TEST(AreaDensity, KappaFormMatchesDetFormOnGeneratedBundle) {
  const auto& b = testing::almost_fuchsian(0.5);
  const auto det = area_density(b, 2.0, End::plus, DensityForm::det);
  const auto kap = area_density(b, 2.0, End::plus, DensityForm::kappa);
  for (int f = 0; f < det.size(); ++f) EXPECT_NEAR(det[f], kap[f], 1e-6 * std::sinh(2.0) * std::sinh(2.0));
}

TEST(ShapeOperatorT, FuchsianIsTanhIdentity) {
  const auto at = shape_operator_t(testing::fuchsian(), 0.7);
  for (const auto& m : at) {
    EXPECT_NEAR(m.a, std::tanh(0.7), 1e-15);
    EXPECT_NEAR(m.b, 0.0, 1e-15);
    EXPECT_NEAR(m.d, std::tanh(0.7), 1e-15);
  }
}

TEST(ShapeOperatorT, EigenvaluesFollowRiccatiFlow) {
  const auto b = split_shape(0.5);
  for (double t : {0.0, 0.5, 1.0, 3.0}) {
    const auto [l1, l2] = shape_operator_t(b, t)[3].eigenvalues();
    EXPECT_NEAR(l1, leaf_principal(0.5, t), 1e-14);
    EXPECT_NEAR(l2, leaf_principal(-0.5, t), 1e-14);
  }
}

TEST(MeanCurvatureDensity, FuchsianIsSinhTwoT) {
  const auto h = mean_curvature_density(testing::fuchsian(), 1.0);
  for (double x : h.values) EXPECT_NEAR(x, std::sinh(2.0), 1e-12);
  EXPECT_NEAR(h[0], 3.6268604078470186, 1e-12);
}

TEST(MeanCurvatureDensity, EqualsTraceTimesAreaDensity) {
  const auto& b = testing::almost_fuchsian(0.5);
  for (End e : kEnds) {
    const auto s = sample_leaf(b, 1.3, e);
    const auto h = mean_curvature_density(b, 1.3, e);
    for (int f = 0; f < h.size(); ++f)
      EXPECT_NEAR(h[f], s.mean_curvature[f] * s.area_density[f], 1e-12 * std::cosh(2.6));
  }
}

TEST(LeafCurvature, MatrixAndScalarFormsAgree) {
  const auto& b = testing::almost_fuchsian(0.5);
  for (double t : {0.0, 0.8, 2.0}) {
    const auto k1 = leaf_curvature(b, t, End::minus);
    const auto k2 = leaf_curvature_scalar(b, t, End::minus);
    for (int f = 0; f < k1.size(); ++f) EXPECT_NEAR(k1[f], k2[f], 1e-13);
  }
}

TEST(LeafCurvature, SplitShapeClosedForm) {
  const auto k = leaf_curvature(split_shape(0.5), 1.0);
  const double expected = leaf_principal(0.5, 1.0) * leaf_principal(-0.5, 1.0) - 1.0;
  EXPECT_NEAR(k[0], expected, 1e-14);
  EXPECT_NEAR(k[0], -0.61400, 1e-5);
}

TEST(LeafCurvature, FuchsianLeavesAreHyperbolicCylinders) {
  // det(tanh t I) - 1 = -1 / cosh^2 t.
  const auto k = leaf_curvature(testing::fuchsian(), 1.0);
  EXPECT_NEAR(k[0], -1.0 / (std::cosh(1.0) * std::cosh(1.0)), 1e-14);
  EXPECT_NEAR(k[0], -0.41997434161402614, 1e-12);
}

TEST(LeafCurvature, ScaledLimitMatchesClosedForm) {
  const double t = 8.0;
  for (double l : {0.0, 0.25, 0.5, 0.8}) {
    const auto k = leaf_curvature_scalar(split_shape(l), t);
    EXPECT_NEAR(std::exp(2 * t) * k[0], limit_curvature_closed_form(l), 1e-4) << "lambda " << l;
  }
  EXPECT_DOUBLE_EQ(limit_curvature_closed_form(0.0), -4.0);
  EXPECT_NEAR(limit_curvature_closed_form(0.5), -20.0 / 3.0, 1e-15);
  EXPECT_THROW(limit_curvature_closed_form(1.0), DomainError);
}

TEST(LeafCurvature, EndsAreMirrorImages) {
  const auto& b = testing::almost_fuchsian(0.5);
  const auto plus = sample_leaf(b, 1.0, End::plus);
  const auto minus = sample_leaf(b, 1.0, End::minus);
  // Swapping the end flips the sign of A, i.e. swaps its eigenvalues.
  for (int f = 0; f < plus.curvature.size(); ++f) {
    EXPECT_NEAR(plus.curvature[f], minus.curvature[f], 1e-13);
    EXPECT_NEAR(plus.area_density[f], minus.area_density[f], 1e-13);
  }
}

TEST(BoundaryMetric, FuchsianHalvesEveryEdge) {
  const auto& b = testing::fuchsian();
  const auto h = boundary_metric(b, End::plus);
  for (int e = 0; e < b.mesh().num_edges(); ++e) EXPECT_NEAR(h.metric.length(e), 0.5 * b.g0().length(e), 1e-14);
  EXPECT_NEAR(h.area(b.mesh()), kPi, 1e-6);
  for (int v = 0; v < b.mesh().num_vertices(); ++v) EXPECT_NEAR(h.curvature.pointwise(v), -4.0, 1e-6);
}

TEST(BoundaryMetric, AreaDensityIsQuarterOneMinusLambdaSquared) {
  const auto& b = testing::almost_fuchsian(0.5);
  for (End e : kEnds) {
    const auto h = boundary_metric(b, e);
    for (int f = 0; f < b.mesh().num_faces(); ++f) {
      const double l = b.shape(f).eigenvalues().first;
      EXPECT_NEAR(h.area_density[f], 0.25 * (1 - l * l), 1e-15);
    }
  }
}

TEST(BoundaryMetric, MatchesLimitOfRescaledLeaves) {
  const auto& b = testing::almost_fuchsian(0.5);
  const auto h = boundary_metric(b, End::plus);
  const double t = 10.0;
  const auto d = area_density(b, t);
  for (int f = 0; f < d.size(); ++f) EXPECT_NEAR(std::exp(-2 * t) * d[f], h.area_density[f], 1e-8);
}

TEST(BoundaryMetric, RejectsDegenerateShape) {
  const auto b = split_shape(1.0);
  EXPECT_THROW(boundary_metric(b, End::plus), MetricError);
}

TEST(LeafSummary, FuchsianTotals) {
  const auto s = summarize_leaf(testing::fuchsian(), 1.0);
  EXPECT_NEAR(s.total_area, 4 * kPi * std::cosh(1.0) * std::cosh(1.0), 1e-6);
  EXPECT_NEAR(s.total_mean_curvature, 4 * kPi * std::sinh(2.0), 1e-6);
  EXPECT_NEAR(s.min_curvature, s.max_curvature, 1e-12);
}

}  // namespace
}  // namespace renvol
