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

// Smoothest line field on a triangulated surface: the lowest eigenvector of
// the face-based connection Laplacian acting on z = e^{2 i theta}, where
// theta is the direction angle in each face's layout frame. Its magnitude
// vanishes at the singularities a line field must have on a surface of
// nonzero Euler characteristic.

#pragma once

#include <Eigen/Sparse>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "renvol/error.hpp"
#include "renvol/mesh/fields.hpp"
#include "renvol/mesh/metric.hpp"

namespace renvol {

struct LineField {
  /// Unit complex number per face; the line has angle arg(z) / 2 in the
  /// face's layout frame.
  std::vector<std::complex<double>> z;
  /// Field magnitude per vertex, normalized to unit area-weighted RMS.
  VertexField magnitude;
  double eigenvalue = 0;
  /// Vertices around which the field winds, with their indices (multiples of
  /// 1/2). The indices sum to the Euler characteristic.
  std::vector<int> singular_vertices;
  std::vector<double> singular_indices;

  /// Unit direction vector in face f's layout frame, rotated by `phase`.
  Vec2 direction(int f, double phase = 0.0) const {
    const double theta = 0.5 * std::arg(z[f]) + phase;
    return {std::cos(theta), std::sin(theta)};
  }
};

namespace line_field_detail {

// Angle of the vector from corner ci to corner cj in a layout.
inline double corner_angle(const std::array<Vec2, 3>& lay, int ci, int cj) {
  const Vec2 v = lay[cj] - lay[ci];
  return std::atan2(v.y(), v.x());
}

inline int corner_of(const TriMesh& mesh, int f, int v) {
  for (int k = 0; k < 3; ++k)
    if (mesh.face(f)[k] == v) return k;
  return -1;
}

}  // namespace line_field_detail

inline LineField smoothest_line_field(const TriMesh& mesh, const DiscreteMetric& metric, int iterations = 60) {
  using cd = std::complex<double>;
  const int nf = mesh.num_faces();
  std::vector<std::array<Vec2, 3>> lay(nf);
  std::vector<double> area(nf);
  for (int f = 0; f < nf; ++f) {
    lay[f] = triangle_layout(metric.face_lengths(mesh, f));
    area[f] = metric.face_area(mesh, f);
  }

  std::vector<Eigen::Triplet<cd>> trip;
  trip.reserve(4 * mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto [i, j] = mesh.edge_vertices(e);
    const int f = mesh.edge_faces(e)[0], g = mesh.edge_faces(e)[1];
    using line_field_detail::corner_of;
    const double af = line_field_detail::corner_angle(lay[f], corner_of(mesh, f, i), corner_of(mesh, f, j));
    const double ag = line_field_detail::corner_angle(lay[g], corner_of(mesh, g, i), corner_of(mesh, g, j));
    const double len = metric.length(e);
    const double w = 3.0 * len * len / (area[f] + area[g]);
    const cd r = std::polar(1.0, 2.0 * (af - ag));
    trip.emplace_back(f, f, w);
    trip.emplace_back(g, g, w);
    trip.emplace_back(f, g, -w * r);
    trip.emplace_back(g, f, -w * std::conj(r));
  }
  Eigen::SparseMatrix<cd> lap(nf, nf);
  lap.setFromTriplets(trip.begin(), trip.end());
  Eigen::SparseLU<Eigen::SparseMatrix<cd>, Eigen::COLAMDOrdering<int>> lu(lap);
  if (lu.info() != Eigen::Success) throw SolverError("connection Laplacian factorization failed");

  const Eigen::Map<const Eigen::VectorXd> mass(area.data(), nf);
  auto m_norm = [&](const Eigen::VectorXcd& u) { return std::sqrt((mass.array() * u.array().abs2()).sum()); };
  Eigen::VectorXcd u = Eigen::VectorXcd::Ones(nf);
  u /= m_norm(u);
  for (int it = 0; it < iterations; ++it) {
    u = lu.solve((mass.array() * u.array()).matrix());
    u /= m_norm(u);
  }

  LineField field;
  const double total = mass.sum();
  field.eigenvalue = std::real(u.dot(lap * u));  // u^H L u, u is M-normalized
  field.z.resize(nf);
  const double rms = 1.0 / std::sqrt(total);
  std::vector<double> mag(nf);
  for (int f = 0; f < nf; ++f) {
    const double a = std::abs(u[f]);
    field.z[f] = a > 0 ? u[f] / a : cd(1.0, 0.0);
    mag[f] = a / rms;
  }
  field.magnitude = VertexField(mesh.num_vertices(), 0.0);
  std::vector<double> weight(mesh.num_vertices(), 0.0);
  for (int f = 0; f < nf; ++f) {
    for (int v : mesh.face(f)) {
      field.magnitude[v] += area[f] * mag[f];
      weight[v] += area[f];
    }
  }
  for (int v = 0; v < mesh.num_vertices(); ++v) field.magnitude[v] /= weight[v];

  // Index of each vertex: winding of the line angle around its ring plus the
  // holonomy (angle defect), over 2 pi.
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    const auto& ring = mesh.vertex_corners(v);
    const int n = static_cast<int>(ring.size());
    double winding = 2.0 * std::numbers::pi;
    for (int r = 0; r < n; ++r) {
      const auto [f, kf] = ring[r];
      const auto [g, kg] = ring[(r + 1) % n];
      const int w = mesh.face(f)[(kf + 2) % 3];  // shared by f and g
      const double af = line_field_detail::corner_angle(lay[f], kf, line_field_detail::corner_of(mesh, f, w));
      const double ag = line_field_detail::corner_angle(lay[g], kg, line_field_detail::corner_of(mesh, g, w));
      winding += 0.5 * std::arg(field.z[g] * std::conj(field.z[f] * std::polar(1.0, 2.0 * (ag - af))));
      winding -= triangle_geometry(metric.face_lengths(mesh, f)).angle[kf];
    }
    const double index = std::round(winding / std::numbers::pi) / 2.0;
    if (index != 0.0) {
      field.singular_vertices.push_back(v);
      field.singular_indices.push_back(index);
    }
  }
  return field;
}

}  // namespace renvol
