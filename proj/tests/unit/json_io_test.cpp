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

#include <fstream>

#include "renvol/mesh/json_io.hpp"
#include "support.hpp"

namespace renvol {
namespace {

TEST(JsonIo, MetricRoundTripIsExact) {
  const auto& m = *testing::genus2();
  const auto dir = testing::scratch_dir("json_metric");
  save_metric(dir / "g.json", m, testing::genus2_seed());
  EXPECT_EQ(load_metric(dir / "g.json", m), testing::genus2_seed());
}

TEST(JsonIo, EdgeOrientationIgnored) {
  const auto m = fixtures::tetrahedron();
  nlohmann::json arr = nlohmann::json::array();
  for (int e = 0; e < m.num_edges(); ++e) {
    const auto [i, j] = m.edge_vertices(e);
    arr.push_back({j, i, 1.0});
  }
  const auto g = edge_lengths_from_json(m, arr);
  for (double l : g.lengths()) EXPECT_EQ(l, 1.0);
}

TEST(JsonIo, MissingDuplicateAndNonEdgeRejected) {
  const auto m = fixtures::tetrahedron();
  nlohmann::json full = edge_lengths_to_json(m, induced_metric(m));
  auto missing = full;
  missing.erase(missing.begin());
  EXPECT_THROW(edge_lengths_from_json(m, missing), MetricError);
  auto dup = full;
  dup.push_back(full[0]);
  EXPECT_THROW(edge_lengths_from_json(m, dup), MetricError);
  const auto g2 = testing::genus2();
  nlohmann::json nonedge = edge_lengths_to_json(*g2, testing::genus2_seed());
  nonedge[0] = {0, g2->num_vertices() - 1, 1.0};
  EXPECT_THROW(edge_lengths_from_json(*g2, nonedge), MetricError);
  EXPECT_THROW(edge_lengths_from_json(m, nlohmann::json::object()), MetricError);
}

TEST(JsonIo, TriangleViolationInOverlayRejected) {
  const auto m = fixtures::tetrahedron();
  nlohmann::json arr = edge_lengths_to_json(m, induced_metric(m));
  arr[0][2] = 3.0;
  EXPECT_THROW(edge_lengths_from_json(m, arr), MetricError);
}

TEST(JsonIo, VertexFieldRoundTripAndSizeCheck) {
  const auto dir = testing::scratch_dir("json_field");
  VertexField f(std::vector<double>{0.1, -2.5, 1e-300, 3.0});
  save_vertex_field(dir / "f.json", f);
  EXPECT_EQ(load_vertex_field(dir / "f.json", 4), f);
  EXPECT_THROW(load_vertex_field(dir / "f.json", 5), Error);
  std::ofstream(dir / "bad.json") << "[1, 2,";
  EXPECT_THROW(load_vertex_field(dir / "bad.json", 2), Error);
}

}  // namespace
}  // namespace renvol
