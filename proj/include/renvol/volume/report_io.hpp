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

// Report serialization: JSON for the full volume report, CSV (header row,
// 17 significant digits) for the t sweep, the z sweep and the verdict table.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "renvol/foliation/foliation.hpp"
#include "renvol/volume/canonical.hpp"

namespace renvol {

/// %.17g, so every double survives a text round trip.
inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void header(std::initializer_list<const char*> cols) {
    bool first = true;
    for (const char* c : cols) {
      if (!first) out_ << ',';
      out_ << c;
      first = false;
    }
    out_ << '\n';
  }
  /// Cells are either preformatted strings or numbers.
  template <class... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
    out_ << '\n';
  }

 private:
  static std::string cell(double x) { return format_number(x); }
  static std::string cell(int x) { return std::to_string(x); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  std::ostream& out_;
};

inline nlohmann::json to_json(const Verdict& v) {
  return {{"name", v.name},   {"passed", v.passed},       {"asserted", v.asserted}, {"value", v.value},
          {"threshold", v.threshold}, {"margin", v.margin}, {"detail", v.detail}};
}

inline nlohmann::json to_json(const FinitePartResult& r) {
  return {{"t", r.t},
          {"end", to_string(r.end)},
          {"fp", r.fp},
          {"pole_residue", r.pole_residue},
          {"growth_coeffs", r.growth_coeffs},
          {"fit_residual", r.fit_residual},
          {"condition_number", r.condition_number}};
}

inline nlohmann::json to_json(const EndReport& e) {
  nlohmann::json sym = nlohmann::json::array(), num = nlohmann::json::array();
  for (const auto& r : e.fp_symbolic) sym.push_back(to_json(r));
  for (const auto& r : e.fp_numeric) num.push_back(to_json(r));
  return {{"end", to_string(e.end)},
          {"h0_area", e.h0_area},
          {"h0_curvature_max", e.h0_curvature_max},
          {"h0_curvature_min", e.h0_curvature_min},
          {"h0_vertices_above_bound", e.h0_vertices_above_bound},
          {"uniformize_residual", e.uniformize_residual},
          {"uniformize_iterations", e.uniformize_iterations},
          {"hf_area", e.hf_area},
          {"shift", e.shift},
          {"dilation_factor", e.dilation_factor},
          {"dilation_shift", e.dilation_shift},
          {"finite_part_symbolic", sym},
          {"finite_part_numeric", num}};
}

inline nlohmann::json to_json(const ChainReport& c) {
  return {{"vol_r_h0", c.vol_r_h0},
          {"vol_r_dilated", c.vol_r_dilated},
          {"vol_r_canonical", c.vol_r_canonical},
          {"c_plus", c.c_plus},
          {"c_minus", c.c_minus},
          {"zero_margin", c.zero_margin},
          {"dilation_margin", c.dilation_margin},
          {"maximality_margin", c.maximality_margin},
          {"holds", c.holds}};
}

inline nlohmann::json to_json(const VolumeReport& r) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  nlohmann::json sweep = nlohmann::json::array();
  for (std::size_t i = 0; i < r.sweep.t.size(); ++i)
    sweep.push_back({{"t", r.sweep.t[i]},
                     {"vol_ks", r.sweep.value[i]},
                     {"compact_volume", r.compact_volume[i]},
                     {"boundary_term", r.boundary_term[i]},
                     {"finite_part_route", r.vol_fp_route[i]}});
  return {{"bundle",
           {{"kind", to_string(r.kind)},
            {"amplitude", r.amplitude},
            {"euler_characteristic", r.euler_characteristic},
            {"faces", r.num_faces},
            {"g0_area", r.g0_area},
            {"gauss_residual_sup", r.gauss_residual_sup},
            {"principal_curvature_sup", r.principal_curvature_sup},
            {"codazzi_residual_sup", r.codazzi_residual_sup},
            {"codazzi_residual_mean", r.codazzi_residual_mean}}},
          {"vol_ks", {{"sweep", sweep}, {"spread", r.sweep.spread}}},
          {"t_star", r.t_star},
          {"vol_r_h0", r.vol_r_h0},
          {"ends", {to_json(r.ends[0]), to_json(r.ends[1])}},
          {"vol_r_canonical", r.vol_r_canonical},
          {"chain", to_json(r.chain)},
          {"verdicts", verdicts},
          {"passed", r.passed()}};
}

inline void write_verdicts_csv(std::ostream& out, const std::vector<Verdict>& verdicts) {
  CsvWriter w(out);
  w.header({"name", "passed", "asserted", "value", "threshold", "margin"});
  for (const auto& v : verdicts)
    w.row(v.name, std::string(v.passed ? "1" : "0"), std::string(v.asserted ? "1" : "0"), v.value, v.threshold,
          v.margin);
}

/// Per-t vol_ks routes of a report.
inline void write_volume_csv(std::ostream& out, const VolumeReport& r) {
  CsvWriter w(out);
  w.header({"t", "vol_ks", "compact_volume", "boundary_term", "finite_part_route"});
  for (std::size_t i = 0; i < r.sweep.t.size(); ++i)
    w.row(r.sweep.t[i], r.sweep.value[i], r.compact_volume[i], r.boundary_term[i], r.vol_fp_route[i]);
  w.row(std::string("spread"), r.sweep.spread, std::string(), std::string(), std::string());
}

struct TSweepRow {
  double t = 0;
  double total_area = 0;
  double total_mean_curvature = 0;
  double min_curvature = 0;
  double max_curvature = 0;
  double vol_ks = 0;
};

struct TSweep {
  std::vector<TSweepRow> rows;
  double spread = 0;  // max - min of vol_ks
};

/// Leaf statistics summed over both ends (the boundary of K_t).
inline TSweep t_sweep(const SurfaceBundle& b, const std::vector<double>& grid) {
  TSweep s;
  const auto ks = vol_ks_sweep(b, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    TSweepRow row;
    row.t = grid[i];
    row.min_curvature = std::numeric_limits<double>::infinity();
    row.max_curvature = -std::numeric_limits<double>::infinity();
    for (End e : kEnds) {
      const auto l = summarize_leaf(b, grid[i], e);
      row.total_area += l.total_area;
      row.total_mean_curvature += l.total_mean_curvature;
      row.min_curvature = std::min(row.min_curvature, l.min_curvature);
      row.max_curvature = std::max(row.max_curvature, l.max_curvature);
    }
    row.vol_ks = ks.value[i];
    s.rows.push_back(row);
  }
  s.spread = ks.spread;
  return s;
}

inline void write_t_sweep_csv(std::ostream& out, const TSweep& s) {
  CsvWriter w(out);
  w.header({"t", "total_area", "total_H_integral", "min_leaf_curvature", "max_leaf_curvature", "vol_ks"});
  for (const auto& r : s.rows)
    w.row(r.t, r.total_area, r.total_mean_curvature, r.min_curvature, r.max_curvature, r.vol_ks);
  w.row(std::string("spread"), std::string(), std::string(), std::string(), std::string(), s.spread);
}

inline nlohmann::json to_json(const TSweep& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"t", r.t},
                    {"total_area", r.total_area},
                    {"total_H_integral", r.total_mean_curvature},
                    {"min_leaf_curvature", r.min_curvature},
                    {"max_leaf_curvature", r.max_curvature},
                    {"vol_ks", r.vol_ks}});
  return {{"rows", rows}, {"spread", s.spread}};
}

struct ZSweepRow {
  End end = End::plus;
  double t = 0;
  double z = 0;
  double integral = 0;  // I(z)
  double model = 0;     // three-mode fit at z
};

struct ZSweep {
  std::vector<ZSweepRow> rows;
  std::vector<FinitePartResult> numeric;
  std::vector<FinitePartResult> symbolic;
  /// max relative discrepancy between numeric and symbolic finite parts
  double spread = 0;
};

inline ZSweep z_sweep(const SurfaceBundle& b, const std::vector<double>& t_grid, const std::vector<double>& z_grid) {
  ZSweep s;
  for (End e : kEnds) {
    for (double t : t_grid) {
      const auto num = riesz_fp_numeric(b, t, e, z_grid);
      const auto sym = riesz_fp_symbolic(b, t, e);
      const auto& c = num.growth_coeffs;
      for (double z : z_grid) {
        const double model = c[0] * std::exp((2 - z) * t) / (z - 2) + c[1] * std::exp(-(2 + z) * t) / (z + 2) -
                             c[2] * std::exp(-z * t) / z;
        s.rows.push_back({e, t, z, funnel_integral(b, t, e, z), model});
      }
      s.spread = std::max(s.spread, canonical_detail::rel_diff(num.fp, sym.fp));
      s.numeric.push_back(num);
      s.symbolic.push_back(sym);
    }
  }
  return s;
}

inline void write_z_sweep_csv(std::ostream& out, const ZSweep& s) {
  CsvWriter w(out);
  w.header({"end", "t", "z", "integral", "model"});
  for (const auto& r : s.rows) w.row(std::string(to_string(r.end)), r.t, r.z, r.integral, r.model);
  w.row(std::string("spread"), std::string(), std::string(), std::string(), s.spread);
}

inline nlohmann::json to_json(const ZSweep& s) {
  nlohmann::json rows = nlohmann::json::array(), fits = nlohmann::json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"end", to_string(r.end)}, {"t", r.t}, {"z", r.z}, {"integral", r.integral}, {"model", r.model}});
  for (std::size_t i = 0; i < s.numeric.size(); ++i)
    fits.push_back({{"numeric", to_json(s.numeric[i])}, {"symbolic", to_json(s.symbolic[i])}});
  return {{"rows", rows}, {"fits", fits}, {"spread", s.spread}};
}

/// Writes `content` to `path`, creating parent directories.
inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

}  // namespace renvol
