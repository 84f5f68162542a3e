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

// Argument parsing for the renvol executable. Shared options live on the root
// app and fall through from the subcommands, so a config file of flat
// `key = value` lines can set any of them; flags given on the command line win.

#pragma once

#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "renvol/cli/commands.hpp"
#include "renvol/log.hpp"

namespace renvol::cli {

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"renvol: renormalized volume of almost-Fuchsian manifolds from discrete minimal-surface data",
               "renvol"};
  app.set_config("--config", "", "Flat key = value file; keys are the long flag names");
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> meshes;
  std::string bundle, metric, kind, out_dir = ".", axis = "both";
  std::vector<double> t_grid, z_grid;
  std::vector<std::string> tol;
  double amplitude = 0.0, target = -4.0;
  std::uint64_t seed = 0;
  int count = 20, perturbations = 50;
  bool verbose = false, quiet = false;

  app.add_option("--mesh", meshes, "Mesh file (OFF or OBJ); check accepts several");
  app.add_option("--bundle", bundle, "Bundle JSON");
  app.add_option("--metric", metric, "Metric overlay JSON replacing the embedding lengths");
  app.add_option("--kind", kind, "fuchsian or almost-fuchsian");
  app.add_option("--amplitude", amplitude, "Principal curvature amplitude s in [0, 1)");
  app.add_option("--t-grid", t_grid, "Comma-separated leaf parameters t >= 0")->delimiter(',');
  app.add_option("--z-grid", z_grid, "Comma-separated Riesz exponents z > 2 (at least 6)")->delimiter(',');
  app.add_option("--tol", tol, "Tolerance overrides, e.g. solver=1e-9,cross_validation=1e-6")->delimiter(',');
  app.add_option("--out", out_dir, "Output directory");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for random recipes and property sweeps");
  app.add_option("--target", target, "uniformize: target curvature (< 0)");
  app.add_option("--axis", axis, "sweep: t, z or both");
  app.add_option("--count", count, "check: number of random bundles");
  app.add_option("--perturbations", perturbations, "check: number of maximality perturbations");
  app.add_flag("--verbose", verbose, "Log progress messages");
  app.add_flag("--quiet", quiet, "Suppress warnings");

  RunConfig cfg;
  auto* gen = app.add_subcommand("gen", "Generate a Fuchsian or almost-Fuchsian bundle from a mesh");
  auto* volr = app.add_subcommand("volr", "Run the renormalized-volume pipeline on a bundle");
  auto* sweep = app.add_subcommand("sweep", "Tabulate vol_ks over t and the Riesz integral over z");
  auto* unif = app.add_subcommand("uniformize", "Conformally rescale a metric to constant negative curvature");
  auto* check = app.add_subcommand("check", "Run the full invariant suite on a mesh");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "renvol: " << e.what() << '\n';
    return kExitError;
  }

  log::set_level(quiet ? log::Level::silent : verbose ? log::Level::info : log::Level::warn);
  try {
    if (gen->parsed()) cfg.command = Command::gen;
    else if (volr->parsed()) cfg.command = Command::volr;
    else if (sweep->parsed()) cfg.command = Command::sweep;
    else if (unif->parsed()) cfg.command = Command::uniformize;
    else if (check->parsed()) cfg.command = Command::check;
    for (const auto& m : meshes) cfg.meshes.emplace_back(m);
    if (!bundle.empty()) cfg.bundle = bundle;
    if (!metric.empty()) cfg.metric = metric;
    if (!kind.empty()) cfg.kind = bundle_kind_from_string(kind);
    cfg.amplitude = amplitude;
    if (!t_grid.empty()) cfg.t_grid = t_grid;
    if (!z_grid.empty()) cfg.z_grid = z_grid;
    for (const auto& item : tol) apply_tolerance_override(cfg.tolerances, item);
    cfg.tolerances_given = !tol.empty();
    cfg.out = out_dir;
    if (seed_opt->count() > 0) cfg.seed = seed;
    cfg.target = target;
    cfg.axis = axis;
    cfg.count = count;
    cfg.perturbations = perturbations;
    return run_command(cfg, out);
  } catch (const std::exception& e) {
    err << "renvol " << to_string(cfg.command) << ": " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace renvol::cli
