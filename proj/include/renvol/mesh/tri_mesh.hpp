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

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "renvol/error.hpp"

namespace renvol {

using Vec3 = Eigen::Vector3d;

/// Closed, oriented, connected triangle mesh.
///
/// Edges are numbered in order of first appearance while scanning faces; edge
/// k of face f is the edge opposite corner k, i.e. between f[(k+1)%3] and
/// f[(k+2)%3]. Instances are immutable once built.
class TriMesh {
 public:
  using Face = std::array<int, 3>;

  TriMesh() = default;

  /// Validates and builds the combinatorial structure. Throws MeshError naming
  /// the offending element on any violation of the closed-manifold contract.
  static TriMesh build(int num_vertices, std::vector<Face> faces,
                       std::optional<std::vector<Vec3>> positions = std::nullopt) {
    TriMesh m;
    m.num_vertices_ = num_vertices;
    m.faces_ = std::move(faces);
    if (positions) {
      if (static_cast<int>(positions->size()) != num_vertices)
        throw MeshError("position count does not match vertex count");
      m.positions_ = std::move(*positions);
    }
    m.validate_and_index();
    return m;
  }

  int num_vertices() const { return num_vertices_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_edges() const { return static_cast<int>(edge_vertices_.size()); }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }

  /// Endpoints (i < j) of edge e.
  const std::array<int, 2>& edge_vertices(int e) const { return edge_vertices_[e]; }
  /// The two faces sharing edge e, in order of appearance.
  const std::array<int, 2>& edge_faces(int e) const { return edge_faces_[e]; }
  /// Edge opposite corner k of face f.
  int face_edge(int f, int k) const { return face_edges_[f][k]; }
  const std::array<int, 3>& face_edges(int f) const { return face_edges_[f]; }

  /// Edge id joining i and j, or -1.
  int edge_index(int i, int j) const {
    auto it = edge_lookup_.find(key(i, j));
    return it == edge_lookup_.end() ? -1 : it->second;
  }

  /// (face, corner) pairs incident to vertex v, in cyclic order around v.
  const std::vector<std::pair<int, int>>& vertex_corners(int v) const { return vertex_corners_[v]; }

  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }
  int genus() const { return (2 - euler_characteristic()) / 2; }

  bool has_positions() const { return !positions_.empty(); }
  const std::vector<Vec3>& positions() const { return positions_; }

  /// Same combinatorics, new embedding.
  TriMesh with_positions(std::vector<Vec3> positions) const {
    if (static_cast<int>(positions.size()) != num_vertices_)
      throw MeshError("position count does not match vertex count");
    TriMesh m = *this;
    m.positions_ = std::move(positions);
    return m;
  }

 private:
  static std::uint64_t key(int i, int j) {
    auto a = static_cast<std::uint64_t>(std::min(i, j));
    auto b = static_cast<std::uint64_t>(std::max(i, j));
    return (a << 32) | b;
  }
  static std::uint64_t directed_key(int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
  }

  void validate_and_index() {
    if (num_vertices_ <= 0) throw MeshError("mesh has no vertices");
    if (faces_.empty()) throw MeshError("mesh has no faces");
    const int nf = num_faces();

    std::unordered_map<std::uint64_t, int> directed;  // halfedge (i->j) -> face
    directed.reserve(3 * faces_.size());
    for (int f = 0; f < nf; ++f) {
      const Face& t = faces_[f];
      for (int k = 0; k < 3; ++k) {
        if (t[k] < 0 || t[k] >= num_vertices_)
          throw MeshError("face " + std::to_string(f) + " references vertex out of range", f);
      }
      if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        throw MeshError("face " + std::to_string(f) + " is degenerate (repeated vertex)", f);
      for (int k = 0; k < 3; ++k) {
        int i = t[k], j = t[(k + 1) % 3];
        if (!directed.emplace(directed_key(i, j), f).second)
          throw MeshError("non-manifold edge (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") at face " + std::to_string(f) +
                              ": more than two faces or inconsistent orientation",
                          f);
      }
    }

    face_edges_.assign(nf, {-1, -1, -1});
    edge_lookup_.reserve(3 * faces_.size() / 2 + 1);
    for (int f = 0; f < nf; ++f) {
      const Face& t = faces_[f];
      for (int k = 0; k < 3; ++k) {
        int i = t[(k + 1) % 3], j = t[(k + 2) % 3];
        if (!directed.count(directed_key(j, i)))
          throw MeshError("open boundary at edge (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") of face " + std::to_string(f),
                          f);
        auto [it, inserted] = edge_lookup_.emplace(key(i, j), num_edges());
        if (inserted) {
          edge_vertices_.push_back({std::min(i, j), std::max(i, j)});
          edge_faces_.push_back({f, -1});
        } else {
          edge_faces_[it->second][1] = f;
        }
        face_edges_[f][k] = it->second;
      }
    }

    // Corners around each vertex, walked in cyclic order. The face after
    // (v, a, b) is the one containing the halfedge v -> b.
    std::vector<std::vector<std::pair<int, int>>> incident(num_vertices_);
    for (int f = 0; f < nf; ++f)
      for (int k = 0; k < 3; ++k) incident[faces_[f][k]].emplace_back(f, k);
    vertex_corners_.assign(num_vertices_, {});
    for (int v = 0; v < num_vertices_; ++v) {
      const auto& inc = incident[v];
      if (inc.empty()) throw MeshError("vertex " + std::to_string(v) + " is isolated", v);
      auto& ring = vertex_corners_[v];
      ring.reserve(inc.size());
      auto [f, k] = inc.front();
      do {
        ring.emplace_back(f, k);
        int b = faces_[f][(k + 2) % 3];
        int g = directed.at(directed_key(v, b));
        int kg = 0;
        while (faces_[g][kg] != v) ++kg;
        f = g;
        k = kg;
      } while (f != inc.front().first && ring.size() <= inc.size());
      if (ring.size() != inc.size())
        throw MeshError("vertex " + std::to_string(v) + " link is not a single cycle", v);
    }

    // Connectivity over faces.
    std::vector<char> seen(nf, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 0;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      ++visited;
      for (int e : face_edges_[f]) {
        for (int g : edge_faces_[e]) {
          if (!seen[g]) {
            seen[g] = 1;
            stack.push_back(g);
          }
        }
      }
    }
    if (visited != nf) throw MeshError("mesh is not connected");
    if (euler_characteristic() % 2 != 0) throw MeshError("odd Euler characteristic");
  }

  int num_vertices_ = 0;
  std::vector<Face> faces_;
  std::vector<Vec3> positions_;
  std::vector<std::array<int, 2>> edge_vertices_;
  std::vector<std::array<int, 2>> edge_faces_;
  std::vector<std::array<int, 3>> face_edges_;
  std::unordered_map<std::uint64_t, int> edge_lookup_;
  std::vector<std::vector<std::pair<int, int>>> vertex_corners_;
};

}  // namespace renvol
