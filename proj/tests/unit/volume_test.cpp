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
#include <sstream>

#include "renvol/volume/canonical.hpp"
#include "renvol/volume/conformal_shift.hpp"
#include "renvol/volume/finite_part.hpp"
#include "renvol/volume/report_io.hpp"
#include "renvol/volume/vol_ks.hpp"
#include "support.hpp"

namespace renvol {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(CompactVolume, FuchsianClosedForm) {
  const auto& b = testing::fuchsian();
  EXPECT_EQ(compact_volume(b, 0.0), 0.0);
  // area * int_{-1}^{1} cosh^2 = 4 pi (1 + sinh(2) / 2)
  EXPECT_NEAR(compact_volume(b, 1.0), 4 * kPi * (1 + 0.5 * std::sinh(2.0)), 1e-6);
  EXPECT_NEAR(compact_volume(b, 1.0), 35.3546, 1e-4);
  EXPECT_THROW(compact_volume(b, -0.1), DomainError);
}

TEST(CompactVolume, IncreasesWithT) {
  const auto& b = testing::almost_fuchsian(0.5);
  double prev = 0;
  for (double t : {0.25, 0.5, 1.0, 2.0}) {
    const double v = compact_volume(b, t);
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(VolKs, FuchsianVanishesForAllT) {
  const auto s = vol_ks_sweep(testing::fuchsian(), default_t_grid());
  for (double v : s.value) EXPECT_NEAR(v, 0.0, 1e-8);
}

TEST(VolKs, IndependentOfT) {
  const auto& b = testing::almost_fuchsian(0.5);
  const auto s = vol_ks_sweep(b, default_t_grid());
  EXPECT_LE(s.spread, 1e-6 * (1 + std::exp(6.0)));
  EXPECT_GT(s.value.front(), -1e-8);
}

TEST(FinitePart, FuchsianSymbolicValues) {
  const auto& b = testing::fuchsian();
  const auto r0 = riesz_fp_symbolic(b, 0.0, End::plus);
  EXPECT_NEAR(r0.fp, 0.0, 1e-6);
  EXPECT_NEAR(r0.pole_residue, -2 * kPi, 1e-6);
  const auto r1 = riesz_fp_symbolic(b, 1.0, End::minus);
  EXPECT_NEAR(r1.fp, -kPi * std::sinh(2.0) - 2 * kPi, 1e-6);
  EXPECT_NEAR(r1.fp, -17.677, 1e-3);
}

TEST(FinitePart, SymbolicEqualsBoundaryFormula) {
  const auto& b = testing::almost_fuchsian(0.5);
  const int chi = b.euler_characteristic();
  for (End e : kEnds) {
    for (double t : {0.0, 1.0, 2.0}) {
      const double formula = -0.25 * mean_curvature_integral(b, t, e) + t * kPi * chi;
      const double fp = riesz_fp_symbolic(b, t, e).fp;
      EXPECT_LE(std::abs(fp - formula) / std::max(1.0, std::abs(formula)), 1e-9);
    }
  }
}

TEST(FinitePart, NumericFitMatchesSymbolic) {
  const auto& b = testing::almost_fuchsian(0.5);
  for (End e : kEnds) {
    for (double t : {0.0, 1.0, 2.0}) {
      const auto sym = riesz_fp_symbolic(b, t, e);
      const auto num = riesz_fp_numeric(b, t, e, default_z_grid());
      EXPECT_LE(std::abs(num.fp - sym.fp) / std::max(1.0, std::abs(sym.fp)), 1e-6);
      EXPECT_NEAR(num.pole_residue, kPi * b.euler_characteristic(), 1e-6);
      EXPECT_LT(num.fit_residual, 1e-10);
    }
  }
}

TEST(FinitePart, FunnelIntegralMatchesQuadrature) {
  // Trapezoid in s on [t, t + 40] of I(z) = int e^{-zs} dA_s.
  const auto& b = testing::fuchsian();
  const double t = 0.5, z = 3.0, h = 1e-3;
  double q = 0;
  for (int i = 0; i <= 40000; ++i) {
    const double s = t + i * h;
    const double w = (i == 0 || i == 40000) ? 0.5 : 1.0;
    q += w * h * std::exp(-z * s) * 4 * kPi * std::cosh(s) * std::cosh(s);
  }
  EXPECT_NEAR(funnel_integral(b, t, End::plus, z), q, 1e-6 * q);
  EXPECT_THROW(funnel_integral(b, t, End::plus, 2.0), DomainError);
}

TEST(FinitePart, RejectsShortOrInvalidGrid) {
  const auto& b = testing::fuchsian();
  EXPECT_THROW(riesz_fp_numeric(b, 0.0, End::plus, {3, 4, 5}), DomainError);
  EXPECT_THROW(riesz_fp_numeric(b, 0.0, End::plus, {1.5, 3, 4, 5, 6, 7}), DomainError);
}

TEST(ConformalShift, DilationValues) {
  EXPECT_NEAR(dilation_shift(-4, std::numbers::e), 4 * kPi, 1e-14);
  EXPECT_EQ(dilation_shift(-2, 1.0), 0.0);
  EXPECT_THROW(dilation_shift(-2, 0.0), DomainError);
}

TEST(ConformalShift, ConstantFactorMatchesDilation) {
  const auto& b = testing::fuchsian();
  for (double c : {0.5, 2.0, std::numbers::e}) {
    const VertexField omega(b.mesh().num_vertices(), std::log(c));
    EXPECT_NEAR(conformal_volume_shift(b.mesh(), b.g0(), omega), dilation_shift(b.euler_characteristic(), c), 1e-9);
  }
}

TEST(ConformalShift, AreaPreservingChangeNeverIncreasesVolume) {
  const auto& b = testing::fuchsian();
  const auto& m = b.mesh();
  for (int k = 1; k <= 4; ++k) {
    VertexField omega(m.num_vertices(), 0.0);
    for (int v = 0; v < m.num_vertices(); ++v) omega[v] = 0.1 * std::sin(k * m.positions()[v].x()) + 0.05 * std::cos(m.positions()[v].y());
    const auto w = area_renormalized(m, b.g0(), hodge_split(m, b.g0(), omega).perp);
    const auto dual = dual_areas(m, b.g0());
    double scaled = 0;
    for (int v = 0; v < m.num_vertices(); ++v) scaled += std::exp(2 * w[v]) * dual[v];
    EXPECT_NEAR(scaled, b.area(), 1e-9 * b.area());
    EXPECT_LE(conformal_volume_shift(m, b.g0(), w), 1e-9);
  }
  EXPECT_NEAR(conformal_volume_shift(m, b.g0(), VertexField(m.num_vertices(), 0.0)), 0.0, 1e-12);
}

// shift_h(w1) + shift_{e^{2 w1} h}(w2) - shift_h(w1 + w2)
double cocycle_defect(const SurfaceBundle& b, const VertexField& w1, const VertexField& w2) {
  const auto& m = b.mesh();
  const auto h1 = conformal_scale(m, b.g0(), w1);
  return conformal_volume_shift(m, b.g0(), w1) + conformal_volume_shift(m, h1, w2) -
         conformal_volume_shift(m, b.g0(), w1 + w2);
}

TEST(ConformalShift, CocycleExactForConstantFirstFactor) {
  const auto& b = testing::fuchsian();
  const auto& m = b.mesh();
  VertexField w2(m.num_vertices(), 0.0);
  for (int v = 0; v < m.num_vertices(); ++v) w2[v] = 0.05 * std::sin(m.positions()[v].x());
  EXPECT_NEAR(cocycle_defect(b, VertexField(m.num_vertices(), 0.4), w2), 0.0, 1e-8);
}

TEST(ConformalShift, CocycleDefectIsThirdOrder) {
  const auto& b = testing::fuchsian();
  const auto& m = b.mesh();
  auto defect = [&](double eps) {
    VertexField w1(m.num_vertices(), 0.0), w2(m.num_vertices(), 0.0);
    for (int v = 0; v < m.num_vertices(); ++v) {
      w1[v] = eps * std::sin(m.positions()[v].x());
      w2[v] = eps * std::cos(m.positions()[v].y());
    }
    return std::abs(cocycle_defect(b, w1, w2));
  };
  const double ratio = defect(0.02) / defect(0.01);
  EXPECT_NEAR(ratio, 8.0, 0.5);
}

TEST(Canonical, FuchsianReportPasses) {
  const auto r = renormalized_volume_canonical(testing::fuchsian());
  EXPECT_TRUE(r.passed());
  EXPECT_NEAR(r.vol_r_h0, 0.0, 1e-8);
  EXPECT_NEAR(r.vol_r_canonical, 0.0, 1e-6);
  ASSERT_NE(r.verdict("fuchsian_zero"), nullptr);
  EXPECT_TRUE(r.verdict("fuchsian_zero")->passed);
  for (const auto& e : r.ends) {
    EXPECT_TRUE(e.error.empty());
    EXPECT_NEAR(e.dilation_factor, 1.0, 1e-6);
  }
}

TEST(Canonical, AlmostFuchsianHasPositiveVolume) {
  const auto r = renormalized_volume_canonical(testing::almost_fuchsian(0.5));
  EXPECT_GT(r.vol_r_canonical, 0.0);
  EXPECT_TRUE(r.chain.holds);
  EXPECT_GT(r.chain.c_plus, 1.0);
  EXPECT_GT(r.chain.c_minus, 1.0);
  EXPECT_LE(std::abs(r.vol_r_h0), r.chain.vol_r_dilated);
  for (const char* name : {"vol_ks_t_independence", "three_way_agreement", "finite_part_formula",
                           "finite_part_numeric", "pole_residue", "inequality_chain", "positivity"}) {
    const auto* v = r.verdict(name);
    ASSERT_NE(v, nullptr) << name;
    EXPECT_TRUE(v->passed) << name << ": " << v->detail;
  }
  const auto* cod = r.verdict("codazzi_residual");
  ASSERT_NE(cod, nullptr);
  EXPECT_FALSE(cod->asserted);
}

TEST(Canonical, CorruptedGaussEquationFails) {
  const auto& f = testing::fuchsian();
  auto shape = ShapeField(f.mesh().num_faces());
  shape[10] = SymMat2{0.3, 0, -0.3};
  const auto r = renormalized_volume_canonical(testing::with_shape(f, shape));
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.verdict("gauss_residual"), nullptr);
  EXPECT_FALSE(r.verdict("gauss_residual")->passed);
}

TEST(ReportIo, NumbersKeepSeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_number(kPi)), kPi);
  std::ostringstream out;
  CsvWriter w(out);
  w.header({"a", "b", "c"});
  w.row(1.5, 2, std::string("x"));
  EXPECT_EQ(out.str(), "a,b,c\n1.5,2,x\n");
}

TEST(ReportIo, VolumeCsvHasHeaderAndSpreadFooter) {
  const auto r = renormalized_volume_canonical(testing::fuchsian());
  std::ostringstream out;
  write_volume_csv(out, r);
  const auto s = out.str();
  EXPECT_EQ(s.substr(0, 2), "t,");
  EXPECT_NE(s.find("\nspread,"), std::string::npos);
  std::ostringstream v;
  write_verdicts_csv(v, r.verdicts);
  EXPECT_EQ(v.str().substr(0, 5), "name,");
  const auto j = to_json(r);
  EXPECT_TRUE(j.contains("verdicts"));
  EXPECT_EQ(j["verdicts"].size(), r.verdicts.size());
}

TEST(ReportIo, SweepsCoverEveryGridPoint) {
  const auto& b = testing::almost_fuchsian(0.25);
  const auto ts = t_sweep(b, {0, 1, 2});
  EXPECT_EQ(ts.rows.size(), 3u);
  const auto zs = z_sweep(b, {0, 1}, default_z_grid());
  EXPECT_EQ(zs.rows.size(), 2u * 2u * default_z_grid().size());
  EXPECT_LE(zs.spread, 1e-6);
}

}  // namespace
}  // namespace renvol
