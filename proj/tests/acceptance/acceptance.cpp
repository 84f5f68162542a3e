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

// Runs the ten acceptance criteria on the genus-2 fixtures and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>

#include "renvol/mesh/mesh_io.hpp"
#include "renvol/suite/invariants.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  using namespace renvol;
  const fs::path data = argc > 1 ? fs::path(argv[1]) : fs::path(RENVOL_DATA_DIR);
  const auto start = std::chrono::steady_clock::now();
  try {
    SuiteOptions opts;
    opts.meshes = {{"genus2_fine", std::make_shared<const TriMesh>(load_mesh(data / "genus2_fine.off"))},
                   {"genus2_coarse", std::make_shared<const TriMesh>(load_mesh(data / "genus2_coarse.off"))}};
    opts.progress = [](const std::string& line) { std::cerr << "  " << line << '\n'; };
    const auto res = run_invariant_suite(opts);

    int failed = 0;
    for (const auto& c : res.criteria) {
      std::printf("[%s] %2d %s: %s\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
      if (!c.passed) ++failed;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%zu criteria passed (%zu bundles, %.1f s)\n", static_cast<int>(res.criteria.size()) - failed,
                res.criteria.size(), res.cases.size(), secs);
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 2;
  }
}
