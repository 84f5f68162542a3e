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

// Subcommand implementations. Each returns a process exit code and writes a
// human summary to `out`; files go under cfg.out.

#pragma once

#include <cstdio>
#include <filesystem>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "renvol/bundle/bundle_io.hpp"
#include "renvol/bundle/generator.hpp"
#include "renvol/cli/run_config.hpp"
#include "renvol/mesh/json_io.hpp"
#include "renvol/mesh/mesh_io.hpp"
#include "renvol/suite/invariants.hpp"
#include "renvol/volume/report_io.hpp"

namespace renvol::cli {

namespace detail {

inline std::string num(double x) { return format_number(x); }

inline std::string short_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline const std::filesystem::path& single_mesh(const RunConfig& cfg) {
  if (cfg.meshes.size() != 1) throw DomainError(std::string(to_string(cfg.command)) + " needs exactly one --mesh");
  return cfg.meshes.front();
}

inline DiscreteMetric seed_metric(const RunConfig& cfg, const TriMesh& mesh) {
  return cfg.metric ? load_metric(*cfg.metric, mesh) : induced_metric(mesh);
}

inline SurfaceBundle require_bundle(const RunConfig& cfg) {
  if (!cfg.bundle) throw DomainError(std::string(to_string(cfg.command)) + " needs --bundle");
  return load_bundle(*cfg.bundle);
}

inline void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  write_text_file(path, j.dump(1) + "\n");
}

template <class F>
void write_csv(const std::filesystem::path& path, F&& fill) {
  std::ostringstream s;
  fill(s);
  write_text_file(path, s.str());
}

inline void print_verdicts(std::ostream& out, const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    const char* tag = v.passed ? "PASS" : (v.asserted ? "FAIL" : "WARN");
    out << "  [" << tag << "] " << v.name << ": value " << short_num(v.value) << ", threshold " << short_num(v.threshold)
        << ", margin " << short_num(v.margin) << '\n';
  }
}

}  // namespace detail

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const auto& mesh_path = detail::single_mesh(cfg);
  auto mesh = std::make_shared<const TriMesh>(load_mesh(mesh_path));
  const int chi = mesh->euler_characteristic();
  if (chi >= 0) throw DomainError("mesh has chi = " + std::to_string(chi) + "; bundles need chi < 0");
  const auto g = detail::seed_metric(cfg, *mesh);
  const BundleKind kind = cfg.kind.value_or(cfg.amplitude > 0 ? BundleKind::almost_fuchsian : BundleKind::fuchsian);
  SurfaceBundle b;
  switch (kind) {
    case BundleKind::fuchsian:
      if (cfg.amplitude != 0) throw DomainError("a Fuchsian bundle has amplitude 0");
      b = make_fuchsian(mesh, g, cfg.tolerances);
      break;
    case BundleKind::almost_fuchsian:
      b = make_almost_fuchsian(mesh, g, cfg.amplitude, cfg.seed, cfg.tolerances);
      break;
    case BundleKind::custom:
      throw DomainError("gen cannot produce custom bundles");
  }
  const auto path = cfg.out / "bundle.json";
  std::filesystem::create_directories(cfg.out);
  save_bundle(path, b, mesh_path);
  const auto v = validate_bundle(b, cfg.tolerances);
  out << "bundle " << to_string(b.kind()) << " on " << mesh->num_faces() << " faces, chi = " << chi << '\n'
      << "  " << v.summary() << '\n'
      << "  wrote " << path.generic_string() << '\n';
  return v.ok() ? kExitOk : kExitVerdict;
}

inline int cmd_volr(const RunConfig& cfg, std::ostream& out) {
  const auto b = detail::require_bundle(cfg);
  ReportOptions opts;
  opts.t_grid = cfg.t_grid;
  opts.z_grid = cfg.z_grid;
  opts.tolerances = cfg.tolerances_given ? cfg.tolerances : b.meta().tolerances;
  const auto r = renormalized_volume_canonical(b, opts);
  detail::write_json(cfg.out / "volume_report.json", to_json(r));
  detail::write_csv(cfg.out / "volume.csv", [&](std::ostream& s) { write_volume_csv(s, r); });
  detail::write_csv(cfg.out / "verdicts.csv", [&](std::ostream& s) { write_verdicts_csv(s, r.verdicts); });
  out << "Vol_R = " << detail::num(r.vol_r_canonical) << "  (" << to_string(r.kind) << ", s = "
      << detail::short_num(r.amplitude) << ", chi = " << r.euler_characteristic << ")\n"
      << "  Vol_R(h0) = " << detail::short_num(r.vol_r_h0) << ", vol_ks spread = " << detail::short_num(r.sweep.spread)
      << '\n';
  for (const auto& e : r.ends) {
    out << "  end " << to_string(e.end) << ": ";
    if (!e.error.empty()) {
      out << "boundary metric failed: " << e.error << '\n';
      continue;
    }
    out << "area(h0) = " << detail::short_num(e.h0_area) << ", c = " << detail::short_num(e.dilation_factor)
        << ", shift = " << detail::short_num(e.shift) << ", max kappa(h0) = " << detail::short_num(e.h0_curvature_max)
        << '\n';
  }
  out << "  chain margins: dilation " << detail::short_num(r.chain.dilation_margin) << ", maximality "
      << detail::short_num(r.chain.maximality_margin) << '\n';
  detail::print_verdicts(out, r.verdicts);
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  return r.passed() ? kExitOk : kExitVerdict;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto b = detail::require_bundle(cfg);
  const Tolerances tol = cfg.tolerances_given ? cfg.tolerances : b.meta().tolerances;
  std::vector<Verdict> verdicts;
  if (cfg.axis != "z") {
    const auto s = t_sweep(b, cfg.t_grid);
    detail::write_csv(cfg.out / "t_sweep.csv", [&](std::ostream& o) { write_t_sweep_csv(o, s); });
    detail::write_json(cfg.out / "t_sweep.json", to_json(s));
    const double tmax = *std::max_element(cfg.t_grid.begin(), cfg.t_grid.end());
    verdicts.push_back(upper_bound("vol_ks_t_independence", s.spread, tol.cross_validation * (1 + std::exp(2 * tmax))));
    out << "t sweep: " << s.rows.size() << " rows, vol_ks spread " << detail::short_num(s.spread) << '\n';
  }
  if (cfg.axis != "t") {
    const auto s = z_sweep(b, cfg.t_grid, cfg.z_grid);
    detail::write_csv(cfg.out / "z_sweep.csv", [&](std::ostream& o) { write_z_sweep_csv(o, s); });
    detail::write_json(cfg.out / "z_sweep.json", to_json(s));
    verdicts.push_back(upper_bound("finite_part_numeric", s.spread, tol.cross_validation));
    out << "z sweep: " << s.rows.size() << " rows, max relative fp discrepancy " << detail::short_num(s.spread) << '\n';
  }
  detail::print_verdicts(out, verdicts);
  const bool ok = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
  return ok ? kExitOk : kExitVerdict;
}

inline int cmd_uniformize(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.target < 0)) throw DomainError("uniformize: target curvature must be negative");
  const auto mesh = load_mesh(detail::single_mesh(cfg));
  const auto h = detail::seed_metric(cfg, mesh);
  SolverOptions so;
  so.tolerance = cfg.tolerances.solver;
  const auto sol = uniformize(mesh, h, cfg.target, so);
  std::filesystem::create_directories(cfg.out);
  save_vertex_field(cfg.out / "omega.json", sol.omega);
  save_metric(cfg.out / "metric.json", mesh, sol.metric);
  out << "uniformized to curvature " << detail::short_num(cfg.target) << " in " << sol.iterations
      << " Newton steps; residual " << detail::short_num(sol.residual) << ", area "
      << detail::num(sol.metric.total_area(mesh)) << '\n';
  return sol.residual <= cfg.tolerances.solver ? kExitOk : kExitVerdict;
}

inline nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json crit = nlohmann::json::array(), cases = nlohmann::json::array();
  for (const auto& c : r.criteria) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& v : c.checks) checks.push_back(renvol::to_json(v));
    crit.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"checks", checks}});
  }
  for (const auto& c : r.cases) {
    nlohmann::json j = {{"label", c.label}, {"mesh", c.mesh_label}, {"amplitude", c.amplitude}, {"random", c.random}};
    if (c.seed) j["seed"] = *c.seed;
    if (!c.error.empty()) j["error"] = c.error;
    if (c.report) j["vol_r_canonical"] = c.report->vol_r_canonical;
    cases.push_back(j);
  }
  return {{"criteria", crit}, {"cases", cases}, {"passed", r.passed()}};
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.meshes.empty()) throw DomainError("check needs at least one --mesh");
  SuiteOptions opts;
  for (const auto& p : cfg.meshes)
    opts.meshes.push_back({p.filename().generic_string(), std::make_shared<const TriMesh>(load_mesh(p))});
  opts.seed = cfg.seed.value_or(1);
  opts.random_bundles = cfg.count;
  opts.perturbations = cfg.perturbations;
  opts.tolerances = cfg.tolerances;
  opts.t_grid = cfg.t_grid;
  opts.z_grid = cfg.z_grid;
  opts.progress = [&out](const std::string& s) { out << "  bundle " << s << '\n' << std::flush; };
  const auto r = run_invariant_suite(opts);
  detail::write_json(cfg.out / "check.json", to_json(r));
  detail::write_csv(cfg.out / "check.csv", [&](std::ostream& s) {
    CsvWriter w(s);
    w.header({"criterion", "name", "passed", "detail"});
    for (const auto& c : r.criteria) {
      std::string d = c.detail;
      std::replace(d.begin(), d.end(), ',', ';');
      w.row(c.id, '"' + c.name + '"', std::string(c.passed ? "1" : "0"), '"' + d + '"');
    }
  });
  for (const auto& c : r.criteria)
    out << "[" << (c.passed ? "PASS" : "FAIL") << "] " << c.id << ". " << c.name << ": " << c.detail << '\n';
  return r.passed() ? kExitOk : kExitVerdict;
}

inline int run_command(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  switch (cfg.command) {
    case Command::gen: return cmd_gen(cfg, out);
    case Command::volr: return cmd_volr(cfg, out);
    case Command::sweep: return cmd_sweep(cfg, out);
    case Command::uniformize: return cmd_uniformize(cfg, out);
    case Command::check: return cmd_check(cfg, out);
  }
  return kExitError;
}

}  // namespace renvol::cli
