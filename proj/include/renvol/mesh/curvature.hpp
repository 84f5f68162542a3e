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

// Intrinsic quantities of a (mesh, edge-length metric) pair: angle-defect
// curvature, integration against barycentric dual areas, the cotangent
// Dirichlet energy, vertex scaling, and the constant/mean-zero split.

#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "renvol/log.hpp"
#include "renvol/mesh/fields.hpp"
#include "renvol/mesh/metric.hpp"

namespace renvol {

/// Angle defect and barycentric dual area per vertex.
struct CurvatureField {
  std::vector<double> defect;
  std::vector<double> dual_area;

  int size() const { return static_cast<int>(defect.size()); }
  /// defect / dual area at v.
  double pointwise(int v) const { return defect[v] / dual_area[v]; }
  VertexField pointwise() const {
    VertexField k(size(), 0.0);
    for (int v = 0; v < size(); ++v) k[v] = pointwise(v);
    return k;
  }
  double total_defect() const {
    // Kahan summation.
    double s = 0, c = 0;
    for (double d : defect) {
      double y = d - c;
      double t = s + y;
      c = (t - s) - y;
      s = t;
    }
    return s;
  }
};

inline std::vector<double> dual_areas(const TriMesh& mesh, const DiscreteMetric& metric) {
  std::vector<double> dual(mesh.num_vertices(), 0.0);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const double a = metric.face_area(mesh, f) / 3.0;
    for (int v : mesh.face(f)) dual[v] += a;
  }
  return dual;
}

inline CurvatureField vertex_curvature(const TriMesh& mesh, const DiscreteMetric& metric) {
  CurvatureField k;
  k.defect.assign(mesh.num_vertices(), 2.0 * std::numbers::pi);
  k.dual_area.assign(mesh.num_vertices(), 0.0);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto g = triangle_geometry(metric.face_lengths(mesh, f));
    const auto& t = mesh.face(f);
    for (int c = 0; c < 3; ++c) {
      k.defect[t[c]] -= g.angle[c];
      k.dual_area[t[c]] += g.area / 3.0;
    }
  }
  return k;
}

inline double integrate_scalar(const TriMesh& mesh, const DiscreteMetric& metric, const VertexField& f) {
  const auto dual = dual_areas(mesh, metric);
  double s = 0;
  for (int v = 0; v < mesh.num_vertices(); ++v) s += f[v] * dual[v];
  return s;
}

inline double integrate_scalar(const TriMesh& mesh, const DiscreteMetric& metric, const FaceField& f) {
  double s = 0;
  for (int i = 0; i < mesh.num_faces(); ++i) s += f[i] * metric.face_area(mesh, i);
  return s;
}

/// Cotangent weight w_ij = (cot alpha + cot beta) / 2 per edge.
inline EdgeField cotan_weights(const TriMesh& mesh, const DiscreteMetric& metric) {
  EdgeField w(mesh.num_edges(), 0.0);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto g = triangle_geometry(metric.face_lengths(mesh, f));
    for (int k = 0; k < 3; ++k) w[mesh.face_edge(f, k)] += 0.5 * g.cot[k];
  }
  return w;
}

/// Sum over edges of w_ij (omega_i - omega_j)^2. Negative weights (obtuse
/// configurations) are kept and reported through the log.
inline double dirichlet_energy(const TriMesh& mesh, const DiscreteMetric& metric, const VertexField& omega) {
  const auto w = cotan_weights(mesh, metric);
  int negative = 0;
  double energy = 0;
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto [i, j] = mesh.edge_vertices(e);
    const double d = omega[i] - omega[j];
    if (w[e] < 0) ++negative;
    energy += w[e] * d * d;
  }
  if (negative > 0)
    log::warn("dirichlet_energy: " + std::to_string(negative) + " negative cotangent weights");
  return energy;
}

/// Vertex scaling l'_ij = exp((omega_i + omega_j) / 2) l_ij.
inline DiscreteMetric conformal_scale(const TriMesh& mesh, const DiscreteMetric& metric, const VertexField& omega) {
  std::vector<double> len(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto [i, j] = mesh.edge_vertices(e);
    len[e] = std::exp(0.5 * (omega[i] + omega[j])) * metric.length(e);
  }
  try {
    return DiscreteMetric::validated(mesh, std::move(len));
  } catch (const MetricError& err) {
    throw MetricError(std::string("conformal_scale: ") + err.what() + " (conformal factor too rough for this mesh)",
                      err.face());
  }
}

/// omega = c + omega_perp with omega_perp of zero mean against the dual areas.
struct HodgeSplit {
  double constant = 0;
  VertexField perp;
};

inline HodgeSplit hodge_split(const TriMesh& mesh, const DiscreteMetric& metric, const VertexField& omega) {
  const auto dual = dual_areas(mesh, metric);
  double num = 0, area = 0;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    num += omega[v] * dual[v];
    area += dual[v];
  }
  HodgeSplit h;
  h.constant = num / area;
  h.perp = omega + (-h.constant);
  return h;
}

/// Count of faces with an obtuse angle (cotangent below zero).
inline int count_obtuse_faces(const TriMesh& mesh, const DiscreteMetric& metric) {
  int n = 0;
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto g = triangle_geometry(metric.face_lengths(mesh, f));
    if (g.cot[0] < 0 || g.cot[1] < 0 || g.cot[2] < 0) ++n;
  }
  return n;
}

}  // namespace renvol
