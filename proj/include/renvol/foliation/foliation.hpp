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

// Equidistant foliation around the minimal surface. Leaf t carries the metric
// g_t = g0((cosh t + A sinh t)^2 ., .); end "+" uses A, end "-" uses -A.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "renvol/bundle/surface_bundle.hpp"
#include "renvol/mesh/curvature.hpp"

namespace renvol {

enum class End { plus, minus };

inline const char* to_string(End e) { return e == End::plus ? "+" : "-"; }
inline double sign(End e) { return e == End::plus ? 1.0 : -1.0; }
inline constexpr End kEnds[2] = {End::plus, End::minus};

/// Which value stands for det A in the density formulas.
enum class DensityForm { det, kappa };

namespace foliation_detail {

inline double gauss_term(const SurfaceBundle& b, int f, DensityForm form) {
  return form == DensityForm::det ? b.shape(f).det() : b.kappa0()[f] + 1.0;
}

inline SymMat2 end_shape(const SurfaceBundle& b, int f, End end) {
  return end == End::plus ? b.shape(f) : -b.shape(f);
}

}  // namespace foliation_detail

/// dg_t / dg0 per face.
inline FaceField area_density(const SurfaceBundle& bundle, double t, End end = End::plus,
                              DensityForm form = DensityForm::det) {
  const double c = std::cosh(t), s = std::sinh(t);
  FaceField out(bundle.mesh().num_faces(), 0.0);
  for (int f = 0; f < out.size(); ++f) {
    const double h0 = foliation_detail::end_shape(bundle, f, end).trace();
    out[f] = c * c + foliation_detail::gauss_term(bundle, f, form) * s * s + h0 * c * s;
  }
  return out;
}

/// A_t = (cosh t + A sinh t)^{-1} (sinh t + A cosh t) per face.
inline ShapeField shape_operator_t(const SurfaceBundle& bundle, double t, End end = End::plus) {
  const double c = std::cosh(t), s = std::sinh(t);
  const Mat2 id = Mat2::Identity();
  ShapeField out(bundle.mesh().num_faces());
  for (int f = 0; f < bundle.mesh().num_faces(); ++f) {
    const Mat2 a = foliation_detail::end_shape(bundle, f, end).matrix();
    const Mat2 m = c * id + s * a;
    const double dm = m.determinant();
    if (!(std::abs(dm) > 1e-14 * m.squaredNorm()))
      throw MetricError("cosh t + A sinh t is singular on face " + std::to_string(f) + " at t = " + std::to_string(t),
                        f);
    const Mat2 at = m.inverse() * (s * id + c * a);
    out[f] = {at(0, 0), 0.5 * (at(0, 1) + at(1, 0)), at(1, 1)};
  }
  return out;
}

/// H^t dg_t / dg0 = cosh(2t) H0 + sinh(2t) (det A + 1).
inline FaceField mean_curvature_density(const SurfaceBundle& bundle, double t, End end = End::plus,
                                        DensityForm form = DensityForm::det) {
  const double c2 = std::cosh(2 * t), s2 = std::sinh(2 * t);
  FaceField out(bundle.mesh().num_faces(), 0.0);
  for (int f = 0; f < out.size(); ++f) {
    const double h0 = foliation_detail::end_shape(bundle, f, end).trace();
    out[f] = c2 * h0 + s2 * (foliation_detail::gauss_term(bundle, f, form) + 1.0);
  }
  return out;
}

/// det A_t - 1 per face, from the matrix A_t.
inline FaceField leaf_curvature(const SurfaceBundle& bundle, double t, End end = End::plus) {
  const auto at = shape_operator_t(bundle, t, end);
  FaceField out(bundle.mesh().num_faces(), 0.0);
  for (int f = 0; f < out.size(); ++f) out[f] = at[f].det() - 1.0;
  return out;
}

/// Leaf curvature from the scalar ratio det(sinh + A cosh) / det(cosh + A sinh).
inline FaceField leaf_curvature_scalar(const SurfaceBundle& bundle, double t, End end = End::plus) {
  const double c = std::cosh(t), s = std::sinh(t);
  FaceField out(bundle.mesh().num_faces(), 0.0);
  for (int f = 0; f < out.size(); ++f) {
    const auto a = foliation_detail::end_shape(bundle, f, end);
    const double num = s * s + a.trace() * s * c + a.det() * c * c;
    const double den = c * c + a.trace() * s * c + a.det() * s * s;
    out[f] = num / den - 1.0;
  }
  return out;
}

struct FoliationSample {
  double t = 0;
  End end = End::plus;
  FaceField area_density;
  FaceField mean_curvature;  // trace A_t
  FaceField det_shape;       // det A_t
  FaceField curvature;       // det A_t - 1
};

inline FoliationSample sample_leaf(const SurfaceBundle& bundle, double t, End end = End::plus) {
  FoliationSample s;
  s.t = t;
  s.end = end;
  s.area_density = area_density(bundle, t, end);
  const auto at = shape_operator_t(bundle, t, end);
  const int nf = bundle.mesh().num_faces();
  s.mean_curvature = FaceField(nf, 0.0);
  s.det_shape = FaceField(nf, 0.0);
  s.curvature = FaceField(nf, 0.0);
  for (int f = 0; f < nf; ++f) {
    s.mean_curvature[f] = at[f].trace();
    s.det_shape[f] = at[f].det();
    s.curvature[f] = s.det_shape[f] - 1.0;
  }
  return s;
}

/// e^{2t} kappa_{g_t} as t -> infinity for principal curvatures +-lambda.
inline double limit_curvature_closed_form(double lambda) {
  if (!(lambda >= 0.0) || !(lambda < 1.0))
    throw DomainError("limit curvature needs 0 <= lambda < 1, got " + std::to_string(lambda));
  return -2.0 * ((1.0 - lambda) / (1.0 + lambda) + (1.0 + lambda) / (1.0 - lambda));
}

struct BoundaryMetric {
  End end = End::plus;
  DiscreteMetric metric;
  /// dh0 / dg0 = det(1 +- A) / 4 per face.
  FaceField area_density;
  CurvatureField curvature;

  double area(const TriMesh& mesh) const { return metric.total_area(mesh); }
};

/// h0 = 1/4 g0((1 +- A)^2 ., .). Each face carries a constant tensor in its
/// g0 frame; the squared length of an edge is the mean of the values from its
/// two faces.
inline BoundaryMetric boundary_metric(const SurfaceBundle& bundle, End end) {
  const TriMesh& m = bundle.mesh();
  const Mat2 id = Mat2::Identity();
  std::vector<double> sq(m.num_edges(), 0.0);
  BoundaryMetric out;
  out.end = end;
  out.area_density = FaceField(m.num_faces(), 0.0);
  for (int f = 0; f < m.num_faces(); ++f) {
    const auto a = foliation_detail::end_shape(bundle, f, end);
    const auto [l1, l2] = a.eigenvalues();
    if (!(1.0 + l2 > 0.0))
      throw MetricError("1 " + std::string(to_string(end)) + " A is not positive definite on face " +
                            std::to_string(f),
                        f);
    const Mat2 p = id + a.matrix();
    const Mat2 tensor = 0.25 * p.transpose() * p;
    out.area_density[f] = 0.25 * (1.0 + a.trace() + a.det());
    const auto& fr = bundle.frames()[f];
    for (int k = 0; k < 3; ++k) {
      const Vec2 ev = fr[(k + 2) % 3] - fr[(k + 1) % 3];
      sq[m.face_edge(f, k)] += 0.5 * ev.dot(tensor * ev);
    }
  }
  for (auto& v : sq) v = std::sqrt(v);
  out.metric = DiscreteMetric::validated(m, std::move(sq));
  out.curvature = vertex_curvature(m, out.metric);
  return out;
}

/// Aggregates of one leaf for the t-sweep table.
struct LeafSummary {
  double t = 0;
  double total_area = 0;
  double total_mean_curvature = 0;  // integral of H^t dg_t
  double min_curvature = 0;
  double max_curvature = 0;
};

inline LeafSummary summarize_leaf(const SurfaceBundle& bundle, double t, End end = End::plus) {
  const auto s = sample_leaf(bundle, t, end);
  const auto hd = mean_curvature_density(bundle, t, end);
  LeafSummary r;
  r.t = t;
  const auto& area = bundle.face_areas();
  for (std::size_t f = 0; f < area.size(); ++f) {
    r.total_area += area[f] * s.area_density[f];
    r.total_mean_curvature += area[f] * hd[f];
  }
  r.min_curvature = s.curvature.min();
  r.max_curvature = s.curvature.max();
  return r;
}

}  // namespace renvol
