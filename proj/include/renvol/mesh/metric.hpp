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

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "renvol/error.hpp"
#include "renvol/mesh/tri_mesh.hpp"

namespace renvol {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Side lengths of a triangle; entry k is opposite corner k.
using TriangleLengths = std::array<double, 3>;

inline bool satisfies_triangle_inequality(const TriangleLengths& l) {
  return l[0] > 0 && l[1] > 0 && l[2] > 0 && l[0] < l[1] + l[2] && l[1] < l[0] + l[2] &&
         l[2] < l[0] + l[1];
}

/// Area from side lengths, using Kahan's ordering so needle triangles keep
/// full relative accuracy.
inline double triangle_area(const TriangleLengths& l) {
  double a = l[0], b = l[1], c = l[2];
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  const double p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return p > 0 ? 0.25 * std::sqrt(p) : 0.0;
}

/// Interior angles and their cotangents (law of cosines, evaluated through
/// atan2 against 4*area for accuracy near 0 and pi).
struct TriangleGeometry {
  double area = 0;
  std::array<double, 3> angle{};
  std::array<double, 3> cot{};
};

inline TriangleGeometry triangle_geometry(const TriangleLengths& l) {
  TriangleGeometry g;
  g.area = triangle_area(l);
  const double four_area = 4.0 * g.area;
  for (int k = 0; k < 3; ++k) {
    const double a = l[k], b = l[(k + 1) % 3], c = l[(k + 2) % 3];
    const double num = b * b + c * c - a * a;
    g.angle[k] = std::atan2(four_area, num);
    g.cot[k] = num / four_area;
  }
  return g;
}

/// Isometric layout of a triangle: corner 0 at the origin, corner 1 on the
/// positive x axis, corner 2 in the upper half plane.
inline std::array<Vec2, 3> triangle_layout(const TriangleLengths& l) {
  const double base = l[2];
  const double x = (l[1] * l[1] + base * base - l[0] * l[0]) / (2.0 * base);
  const double y = 2.0 * triangle_area(l) / base;
  return {Vec2(0, 0), Vec2(base, 0), Vec2(x, y)};
}

/// Positive length per edge, satisfying the strict triangle inequality on
/// every face of the mesh it was validated against.
class DiscreteMetric {
 public:
  DiscreteMetric() = default;

  /// Throws MetricError naming the first face that violates the triangle
  /// inequality (or the first non-positive / non-finite length).
  static DiscreteMetric validated(const TriMesh& mesh, std::vector<double> lengths) {
    if (static_cast<int>(lengths.size()) != mesh.num_edges())
      throw MetricError("edge length count " + std::to_string(lengths.size()) +
                        " does not match edge count " + std::to_string(mesh.num_edges()));
    for (std::size_t e = 0; e < lengths.size(); ++e) {
      if (!(lengths[e] > 0) || !std::isfinite(lengths[e]))
        throw MetricError("edge " + std::to_string(e) + " has non-positive or non-finite length");
    }
    DiscreteMetric m(std::move(lengths));
    for (int f = 0; f < mesh.num_faces(); ++f) {
      const auto l = m.face_lengths(mesh, f);
      if (!satisfies_triangle_inequality(l) || !(triangle_area(l) > 0))
        throw MetricError("triangle inequality violated on face " + std::to_string(f), f);
    }
    return m;
  }

  double length(int e) const { return lengths_[e]; }
  const std::vector<double>& lengths() const { return lengths_; }
  int size() const { return static_cast<int>(lengths_.size()); }

  TriangleLengths face_lengths(const TriMesh& mesh, int f) const {
    const auto& fe = mesh.face_edges(f);
    return {lengths_[fe[0]], lengths_[fe[1]], lengths_[fe[2]]};
  }

  double face_area(const TriMesh& mesh, int f) const { return triangle_area(face_lengths(mesh, f)); }

  std::vector<double> face_areas(const TriMesh& mesh) const {
    std::vector<double> a(mesh.num_faces());
    for (int f = 0; f < mesh.num_faces(); ++f) a[f] = face_area(mesh, f);
    return a;
  }

  double total_area(const TriMesh& mesh) const {
    const auto a = face_areas(mesh);
    return std::accumulate(a.begin(), a.end(), 0.0);
  }

  bool operator==(const DiscreteMetric&) const = default;

 private:
  explicit DiscreteMetric(std::vector<double> lengths) : lengths_(std::move(lengths)) {}
  std::vector<double> lengths_;
};

/// Edge lengths of the 3D embedding carried by the mesh.
inline DiscreteMetric induced_metric(const TriMesh& mesh) {
  if (!mesh.has_positions()) throw MetricError("mesh has no embedding coordinates");
  const auto& p = mesh.positions();
  std::vector<double> len(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto [i, j] = mesh.edge_vertices(e);
    len[e] = (p[i] - p[j]).norm();
  }
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto& t = mesh.face(f);
    const double twice_area = (p[t[1]] - p[t[0]]).cross(p[t[2]] - p[t[0]]).norm();
    if (!(twice_area > 0)) throw MetricError("degenerate face " + std::to_string(f), f);
  }
  return DiscreteMetric::validated(mesh, std::move(len));
}

}  // namespace renvol
