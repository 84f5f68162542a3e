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

// Writes the shipped fixture meshes into a directory (default: data).

#include <filesystem>
#include <fstream>
#include <iostream>

#include "renvol/mesh/fixtures.hpp"
#include "renvol/mesh/mesh_io.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  using namespace renvol;
  if (argc > 2 || (argc == 2 && argv[1][0] == '-')) {
    std::cerr << "usage: make_fixtures [output-dir]\n";
    return 2;
  }
  const fs::path dir = argc > 1 ? argv[1] : "data";
  fs::create_directories(dir);
  save_off(dir / "genus2_coarse.off", fixtures::genus2(2));
  save_off(dir / "genus2_fine.off", fixtures::genus2(3));
  save_off(dir / "tetrahedron.off", fixtures::tetrahedron());
  save_off(dir / "torus.off", fixtures::torus());
  // A quad face: readers must reject it.
  std::ofstream(dir / "quad.off") << "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n";
  std::cout << "wrote fixtures to " << dir.generic_string() << '\n';
}
