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

// ASCII OFF / OBJ reading and OFF writing for triangle meshes.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "renvol/mesh/tri_mesh.hpp"

namespace renvol {

namespace io_detail {

inline std::string lower_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace io_detail

/// Parses an ASCII OFF stream. Errors carry the offending face index when the
/// problem is a face, otherwise the 1-based line number.
inline TriMesh read_off(std::istream& in) {
  std::vector<std::string> tokens_lines;
  std::vector<int> line_numbers;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = io_detail::strip_comment(raw);
    if (s.empty()) continue;
    tokens_lines.push_back(s);
    line_numbers.push_back(lineno);
  }
  if (tokens_lines.empty()) throw MeshError("parse failure: empty OFF file");

  std::size_t cursor = 0;
  std::string header = tokens_lines[0];
  std::istringstream hs(header);
  std::string magic;
  hs >> magic;
  if (magic.rfind("OFF", 0) != 0) throw MeshError("parse failure: missing OFF header", line_numbers[0]);
  long nv = -1, nf = -1, ne = 0;
  if (!(hs >> nv)) {
    ++cursor;
    if (cursor >= tokens_lines.size()) throw MeshError("parse failure: missing OFF counts");
    std::istringstream cs(tokens_lines[cursor]);
    if (!(cs >> nv >> nf)) throw MeshError("parse failure: bad OFF counts", line_numbers[cursor]);
    cs >> ne;
  } else if (!(hs >> nf)) {
    throw MeshError("parse failure: bad OFF counts", line_numbers[0]);
  }
  ++cursor;
  if (nv <= 0 || nf <= 0) throw MeshError("parse failure: non-positive OFF counts");
  if (cursor + static_cast<std::size_t>(nv + nf) > tokens_lines.size())
    throw MeshError("parse failure: OFF file truncated");

  std::vector<Vec3> pos(nv);
  for (long v = 0; v < nv; ++v, ++cursor) {
    std::istringstream vs(tokens_lines[cursor]);
    double x, y, z;
    if (!(vs >> x >> y >> z))
      throw MeshError("parse failure: bad vertex " + std::to_string(v), line_numbers[cursor]);
    pos[v] = Vec3(x, y, z);
  }
  std::vector<TriMesh::Face> faces(nf);
  for (long f = 0; f < nf; ++f, ++cursor) {
    std::istringstream fs(tokens_lines[cursor]);
    int n;
    if (!(fs >> n)) throw MeshError("parse failure: bad face " + std::to_string(f), line_numbers[cursor]);
    if (n != 3) throw MeshError("non-triangle face " + std::to_string(f), f);
    if (!(fs >> faces[f][0] >> faces[f][1] >> faces[f][2]))
      throw MeshError("parse failure: bad face " + std::to_string(f), line_numbers[cursor]);
  }
  return TriMesh::build(static_cast<int>(nv), std::move(faces), std::move(pos));
}

/// Parses an ASCII OBJ stream (v and f records; texture/normal indices and
/// negative indices accepted, everything else ignored).
inline TriMesh read_obj(std::istream& in) {
  std::vector<Vec3> pos;
  std::vector<TriMesh::Face> faces;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = io_detail::strip_comment(raw);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) throw MeshError("parse failure: bad vertex record", lineno);
      pos.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ls >> tok) {
        int i = 0;
        try {
          i = std::stoi(tok.substr(0, tok.find('/')));
        } catch (const std::exception&) {
          throw MeshError("parse failure: bad face index '" + tok + "'", lineno);
        }
        if (i < 0) i = static_cast<int>(pos.size()) + i + 1;
        idx.push_back(i - 1);
      }
      if (idx.size() != 3) throw MeshError("non-triangle face " + std::to_string(faces.size()),
                                           static_cast<std::int64_t>(faces.size()));
      faces.push_back({idx[0], idx[1], idx[2]});
    }
  }
  if (pos.empty()) throw MeshError("parse failure: OBJ file has no vertices");
  const int nv = static_cast<int>(pos.size());
  return TriMesh::build(nv, std::move(faces), std::move(pos));
}

/// Loads an OFF or OBJ file chosen by extension.
inline TriMesh load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file " + path.string());
  const std::string ext = io_detail::lower_extension(path);
  if (ext == ".off") return read_off(in);
  if (ext == ".obj") return read_obj(in);
  throw MeshError("unsupported mesh format '" + ext + "' (expected .off or .obj)");
}

inline void write_off(std::ostream& out, const TriMesh& mesh) {
  out << "OFF\n" << mesh.num_vertices() << ' ' << mesh.num_faces() << ' ' << mesh.num_edges() << '\n';
  char buf[96];
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    Vec3 p = mesh.has_positions() ? mesh.positions()[v] : Vec3::Zero();
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p.x(), p.y(), p.z());
    out << buf;
  }
  for (const auto& f : mesh.faces()) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

inline void save_off(const std::filesystem::path& path, const TriMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw MeshError("cannot write mesh file " + path.string());
  write_off(out, mesh);
}

}  // namespace renvol
