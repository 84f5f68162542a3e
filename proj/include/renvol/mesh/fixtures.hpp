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

// Procedural test meshes: regular tetrahedron, tori, and a genus-2 surface
// made of two tori joined by a short tube, smoothed by Loop subdivision.

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "renvol/mesh/metric.hpp"
#include "renvol/mesh/tri_mesh.hpp"

namespace renvol::fixtures {

/// Regular tetrahedron with unit edges.
inline TriMesh tetrahedron() {
  const double s = 1.0 / (2.0 * std::sqrt(2.0));
  std::vector<Vec3> p{Vec3(1, 1, 1) * s, Vec3(1, -1, -1) * s, Vec3(-1, 1, -1) * s, Vec3(-1, -1, 1) * s};
  return TriMesh::build(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}, std::move(p));
}

namespace detail {

struct TorusGrid {
  std::vector<Vec3> positions;
  std::vector<TriMesh::Face> faces;
};

// Grid torus (nu around the axis, nv around the tube). Quad (0, 0) is centred
// on the outermost point in the +x direction. Faces are oriented outward.
inline TorusGrid torus_grid(int nu, int nv, double major, double minor, bool skip_quad00) {
  TorusGrid g;
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < nu; ++i) {
    const double u = two_pi * i / nu - std::numbers::pi / nu;
    for (int j = 0; j < nv; ++j) {
      const double v = two_pi * j / nv - std::numbers::pi / nv;
      g.positions.emplace_back((major + minor * std::cos(v)) * std::cos(u),
                               (major + minor * std::cos(v)) * std::sin(u), minor * std::sin(v));
    }
  }
  auto id = [&](int i, int j) { return ((i + nu) % nu) * nv + (j + nv) % nv; };
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nv; ++j) {
      if (skip_quad00 && i == 0 && j == 0) continue;
      g.faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      g.faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return g;
}

}  // namespace detail

/// Embedded torus of revolution about the z axis (chi = 0).
inline TriMesh torus(int nu = 24, int nv = 12, double major = 2.0, double minor = 0.7) {
  auto g = detail::torus_grid(nu, nv, major, minor, false);
  const int n = static_cast<int>(g.positions.size());
  return TriMesh::build(n, std::move(g.faces), std::move(g.positions));
}

/// Combinatorial flat torus: an n x n periodic grid of right triangles with
/// legs `spacing`. No embedding; use flat_torus_metric for its lengths.
inline TriMesh flat_torus(int n) {
  std::vector<TriMesh::Face> faces;
  auto id = [n](int i, int j) { return ((i + n) % n) * n + (j + n) % n; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return TriMesh::build(n * n, std::move(faces));
}

/// Unit-square flat metric on flat_torus(n): legs 1/n, diagonals sqrt(2)/n.
/// Vertex (i, j) sits at (i/n, j/n).
inline DiscreteMetric flat_torus_metric(const TriMesh& mesh, int n) {
  std::vector<double> len(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto [a, b] = mesh.edge_vertices(e);
    const int di = std::abs(a / n - b / n), dj = std::abs(a % n - b % n);
    const bool diagonal = (di == 1 || di == n - 1) && (dj == 1 || dj == n - 1);
    len[e] = (diagonal ? std::sqrt(2.0) : 1.0) / n;
  }
  return DiscreteMetric::validated(mesh, std::move(len));
}

/// One step of Loop subdivision on a closed mesh with positions.
inline TriMesh loop_subdivide(const TriMesh& mesh) {
  const int nv = mesh.num_vertices();
  const auto& p = mesh.positions();
  std::vector<Vec3> out(nv + mesh.num_edges());
  for (int v = 0; v < nv; ++v) {
    const auto& ring = mesh.vertex_corners(v);
    const int n = static_cast<int>(ring.size());
    Vec3 sum = Vec3::Zero();
    for (auto [f, k] : ring) sum += p[mesh.face(f)[(k + 1) % 3]];
    const double c = 0.375 + 0.25 * std::cos(2.0 * std::numbers::pi / n);
    const double beta = (0.625 - c * c) / n;
    out[v] = (1.0 - n * beta) * p[v] + beta * sum;
  }
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto [i, j] = mesh.edge_vertices(e);
    Vec3 opposite = Vec3::Zero();
    for (int f : mesh.edge_faces(e)) {
      for (int k = 0; k < 3; ++k)
        if (mesh.face_edge(f, k) == e) opposite += p[mesh.face(f)[k]];
    }
    out[nv + e] = 0.375 * (p[i] + p[j]) + 0.125 * opposite;
  }
  std::vector<TriMesh::Face> faces;
  faces.reserve(4 * mesh.num_faces());
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const auto& t = mesh.face(f);
    const int ma = nv + mesh.face_edge(f, 0), mb = nv + mesh.face_edge(f, 1), mc = nv + mesh.face_edge(f, 2);
    faces.push_back({t[0], mc, mb});
    faces.push_back({t[1], ma, mc});
    faces.push_back({t[2], mb, ma});
    faces.push_back({ma, mb, mc});
  }
  const int n = static_cast<int>(out.size());
  return TriMesh::build(n, std::move(faces), std::move(out));
}

/// Genus-2 control mesh: two 8x4 grid tori, one quad removed from each on the
/// facing sides, the two square holes joined by a ring of four quads.
inline TriMesh genus2_control(double major = 1.0, double minor = 0.5, double gap = 0.7) {
  constexpr int nu = 8, nv = 4;
  const double offset = major + minor + 0.5 * gap;
  auto left = detail::torus_grid(nu, nv, major, minor, true);
  const int n = static_cast<int>(left.positions.size());

  std::vector<Vec3> pos;
  std::vector<TriMesh::Face> faces;
  for (const auto& q : left.positions) pos.emplace_back(q.x() - offset, q.y(), q.z());
  for (const auto& q : left.positions) pos.emplace_back(offset - q.x(), q.y(), q.z());  // mirror
  for (const auto& f : left.faces) faces.push_back(f);
  for (const auto& f : left.faces) faces.push_back({f[0] + n, f[2] + n, f[1] + n});  // reversed

  // Removed quad had boundary a->b->c->d; the tube carries those halfedges on
  // the left and their reverses on the mirrored copy.
  const int loop[4] = {0 * nv + 0, 1 * nv + 0, 1 * nv + 1, 0 * nv + 1};
  for (int k = 0; k < 4; ++k) {
    const int a = loop[k], b = loop[(k + 1) % 4];
    faces.push_back({a, b, b + n});
    faces.push_back({a, b + n, a + n});
  }
  const int total = static_cast<int>(pos.size());
  return TriMesh::build(total, std::move(faces), std::move(pos));
}

/// Smooth genus-2 fixture: `levels` Loop subdivisions of genus2_control().
/// levels = 2 gives 2112 faces, levels = 3 gives 8448.
inline TriMesh genus2(int levels = 2) {
  TriMesh m = genus2_control();
  for (int i = 0; i < levels; ++i) m = loop_subdivide(m);
  return m;
}

}  // namespace renvol::fixtures
