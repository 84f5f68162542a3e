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

#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "renvol/mesh/metric.hpp"

namespace renvol {

/// Symmetric 2x2 matrix [[a, b], [b, d]] in an orthonormal frame.
struct SymMat2 {
  double a = 0, b = 0, d = 0;

  static SymMat2 zero() { return {}; }
  static SymMat2 identity(double s = 1.0) { return {s, 0, s}; }
  /// lambda (e1 e1^T - e2 e2^T) with e1 = (cos theta, sin theta).
  static SymMat2 trace_free(double lambda, const Vec2& unit_e1) {
    const double c = unit_e1.x(), s = unit_e1.y();
    const double c2 = c * c - s * s, s2 = 2 * c * s;
    return {lambda * c2, lambda * s2, -(lambda * c2)};
  }

  double trace() const { return a + d; }
  double det() const { return a * d - b * b; }
  /// Eigenvalues (larger, smaller).
  std::pair<double, double> eigenvalues() const {
    const double mean = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), b);
    return {mean + r, mean - r};
  }
  Mat2 matrix() const {
    Mat2 m;
    m << a, b, b, d;
    return m;
  }
  SymMat2 operator-() const { return {-a, -b, -d}; }
  /// v^T M v
  double quadratic(const Vec2& v) const { return a * v.x() * v.x() + 2 * b * v.x() * v.y() + d * v.y() * v.y(); }

  bool operator==(const SymMat2&) const = default;
};

/// The discrete shape operator: one symmetric matrix per face, expressed in
/// the face frame of the g0 layout (e1 along corner 0 -> corner 1, e2 its
/// counter-clockwise normal).
using ShapeField = std::vector<SymMat2>;

/// Face frames of a metric: the isometric layout of each triangle. Vertex 1
/// lies on e1, vertex 2 has positive e2 coordinate.
inline std::vector<std::array<Vec2, 3>> face_frames(const TriMesh& mesh, const DiscreteMetric& metric) {
  std::vector<std::array<Vec2, 3>> frames(mesh.num_faces());
  for (int f = 0; f < mesh.num_faces(); ++f) frames[f] = triangle_layout(metric.face_lengths(mesh, f));
  return frames;
}

}  // namespace renvol
