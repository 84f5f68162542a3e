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

// Canonical renormalized volume: Vol_R with respect to the boundary metrics
// h0 of the minimal-surface foliation, corrected to the constant curvature -4
// representatives h_F of each end's conformal class.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "renvol/bundle/surface_bundle.hpp"
#include "renvol/foliation/foliation.hpp"
#include "renvol/mesh/conformal_solver.hpp"
#include "renvol/volume/conformal_shift.hpp"
#include "renvol/volume/finite_part.hpp"
#include "renvol/volume/vol_ks.hpp"

namespace renvol {

inline std::vector<double> default_t_grid() { return {0, 0.5, 1, 1.5, 2, 2.5, 3}; }
inline std::vector<double> default_z_grid() { return {2.5, 3, 3.5, 4, 5, 6}; }

struct ReportOptions {
  std::vector<double> t_grid = default_t_grid();
  std::vector<double> z_grid = default_z_grid();
  /// Leaf at which Vol_R(h0) is read off.
  double t_star = 0.0;
  Tolerances tolerances;
};

/// One checked statement. Failing asserted verdicts make the run fail;
/// unasserted ones are warnings.
struct Verdict {
  std::string name;
  bool passed = false;
  bool asserted = true;
  double value = 0;
  double threshold = 0;
  /// Signed distance to the threshold; >= 0 when passed.
  double margin = 0;
  std::string detail;
};

inline Verdict upper_bound(std::string name, double value, double bound, std::string detail = {}) {
  return {std::move(name), value <= bound, true, value, bound, bound - value, std::move(detail)};
}
inline Verdict lower_bound(std::string name, double value, double bound, std::string detail = {}) {
  return {std::move(name), value >= bound, true, value, bound, value - bound, std::move(detail)};
}

struct EndReport {
  End end = End::plus;
  /// Nonempty when h0 or its uniformization could not be built; the h0 and
  /// h_F fields are then NaN.
  std::string error;
  double h0_area = 0;
  double h0_curvature_max = 0;
  double h0_curvature_min = 0;
  int h0_vertices_above_bound = 0;
  double uniformize_residual = 0;
  int uniformize_iterations = 0;
  double hf_area = 0;
  /// Vol_R(h_F) - Vol_R(h0) for this end.
  double shift = 0;
  /// c with c^2 = area(h_F) / area(h0).
  double dilation_factor = 1;
  double dilation_shift = 0;
  std::vector<FinitePartResult> fp_symbolic;
  std::vector<FinitePartResult> fp_numeric;
};

struct ChainReport {
  double vol_r_h0 = 0;
  double vol_r_dilated = 0;  // vol_r_h0 + sum of dilation shifts
  double vol_r_canonical = 0;
  double c_plus = 1, c_minus = 1;
  /// Margins of 0 <= Vol_R(h0) (as |Vol_R(h0)| <= tol), Vol_R(h0) <= Vol_R(c^2 h0),
  /// Vol_R(c^2 h0) <= Vol_R(h_F).
  double zero_margin = 0;
  double dilation_margin = 0;
  double maximality_margin = 0;
  bool holds = false;
};

struct VolumeReport {
  BundleKind kind = BundleKind::custom;
  double amplitude = 0;
  int euler_characteristic = 0;
  int num_faces = 0;
  double g0_area = 0;
  double gauss_residual_sup = 0;
  double principal_curvature_sup = 0;
  double codazzi_residual_sup = 0;
  double codazzi_residual_mean = 0;

  VolKsSweep sweep;
  /// Compact volume and the finite-part route to vol_ks per grid t.
  std::vector<double> compact_volume;
  std::vector<double> vol_fp_route;
  std::vector<double> boundary_term;

  double t_star = 0;
  double vol_r_h0 = 0;
  EndReport ends[2];
  double vol_r_canonical = 0;
  ChainReport chain;
  std::vector<Verdict> verdicts;

  bool passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed || !v.asserted; });
  }
  const Verdict* verdict(const std::string& name) const {
    for (const auto& v : verdicts)
      if (v.name == name) return &v;
    return nullptr;
  }
};

/// Per-end c and the chain Vol_R(h0) <= Vol_R(c^2 h0) <= Vol_R(h_F), using
/// areas and shifts already computed for the ends.
inline ChainReport inequality_chain(int chi, double vol_r_h0, const EndReport& plus, const EndReport& minus,
                                    double tol) {
  ChainReport c;
  c.vol_r_h0 = vol_r_h0;
  c.c_plus = plus.dilation_factor;
  c.c_minus = minus.dilation_factor;
  c.vol_r_dilated = vol_r_h0 + dilation_shift(chi, c.c_plus) + dilation_shift(chi, c.c_minus);
  c.vol_r_canonical = vol_r_h0 + plus.shift + minus.shift;
  c.zero_margin = tol - std::abs(vol_r_h0);
  c.dilation_margin = c.vol_r_dilated - vol_r_h0;
  c.maximality_margin = c.vol_r_canonical - c.vol_r_dilated;
  c.holds = c.zero_margin >= 0 && c.dilation_margin >= -tol && c.maximality_margin >= -tol;
  return c;
}

namespace canonical_detail {

inline void process_boundary(const SurfaceBundle& b, EndReport& r, const Tolerances& tol) {
  const TriMesh& m = b.mesh();
  const auto h0 = boundary_metric(b, r.end);
  r.h0_area = h0.area(m);
  const auto k = h0.curvature.pointwise();
  r.h0_curvature_max = k.max();
  r.h0_curvature_min = k.min();
  for (double x : k.values)
    if (x > -4.0 + tol.mesh_curvature) ++r.h0_vertices_above_bound;

  SolverOptions so;
  so.tolerance = tol.solver;
  const auto sol = uniformize(m, h0.metric, -4.0, so);
  r.uniformize_residual = sol.residual;
  r.uniformize_iterations = sol.iterations;
  r.hf_area = sol.metric.total_area(m);
  r.shift = conformal_volume_shift(m, h0.metric, sol.omega);
  r.dilation_factor = std::sqrt(r.hf_area / r.h0_area);
  r.dilation_shift = dilation_shift(m.euler_characteristic(), r.dilation_factor);
}

inline EndReport process_end(const SurfaceBundle& b, End end, const ReportOptions& opts) {
  EndReport r;
  r.end = end;
  try {
    process_boundary(b, r, opts.tolerances);
  } catch (const Error& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.error = e.what();
    r.h0_area = r.h0_curvature_max = r.h0_curvature_min = r.uniformize_residual = r.hf_area = r.shift =
        r.dilation_factor = r.dilation_shift = nan;
  }
  for (double t : opts.t_grid) {
    r.fp_symbolic.push_back(riesz_fp_symbolic(b, t, end));
    r.fp_numeric.push_back(riesz_fp_numeric(b, t, end, opts.z_grid));
  }
  return r;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace canonical_detail

inline VolumeReport renormalized_volume_canonical(const SurfaceBundle& b, const ReportOptions& opts = {}) {
  if (opts.t_grid.empty() || opts.z_grid.empty()) throw DomainError("t and z grids must be nonempty");
  if (!opts.tolerances.valid()) throw DomainError("tolerances must be positive");
  const auto& tol = opts.tolerances;
  const TriMesh& m = b.mesh();
  const int chi = m.euler_characteristic();
  const double pi = std::numbers::pi;
  using canonical_detail::rel_diff;

  VolumeReport r;
  r.kind = b.kind();
  r.amplitude = b.meta().amplitude;
  r.euler_characteristic = chi;
  r.num_faces = m.num_faces();
  r.g0_area = b.area();
  r.gauss_residual_sup = b.gauss_residual().sup_norm();
  r.principal_curvature_sup = sup_principal_curvature(b);
  const auto cod = codazzi_residual(b);
  r.codazzi_residual_sup = cod.sup;
  r.codazzi_residual_mean = cod.mean;

  r.sweep = vol_ks_sweep(b, opts.t_grid);
  r.t_star = opts.t_star;
  r.vol_r_h0 = vol_ks(b, opts.t_star);
  r.ends[0] = canonical_detail::process_end(b, End::plus, opts);
  r.ends[1] = canonical_detail::process_end(b, End::minus, opts);
  r.vol_r_canonical = r.vol_r_h0 + r.ends[0].shift + r.ends[1].shift;
  if (r.ends[0].error.empty() && r.ends[1].error.empty())
    r.chain = inequality_chain(chi, r.vol_r_h0, r.ends[0], r.ends[1], tol.inequality);
  else
    r.chain.vol_r_h0 = r.vol_r_h0;

  // Three routes to vol_ks and the finite-part checks.
  double three_way = 0, fp_formula = 0, fp_numeric = 0, pole = 0;
  for (std::size_t i = 0; i < opts.t_grid.size(); ++i) {
    const double t = opts.t_grid[i];
    const double kt = compact_volume(b, t);
    double boundary = 0, fp_sum = 0;
    for (int e = 0; e < 2; ++e) {
      const End end = r.ends[e].end;
      const double formula = -0.25 * mean_curvature_integral(b, t, end) + t * pi * chi;
      const auto& s = r.ends[e].fp_symbolic[i];
      const auto& n = r.ends[e].fp_numeric[i];
      boundary += formula;
      fp_sum += s.fp;
      fp_formula = std::max(fp_formula, rel_diff(s.fp, formula));
      fp_numeric = std::max(fp_numeric, rel_diff(n.fp, s.fp));
      pole = std::max({pole, std::abs(s.pole_residue - pi * chi), std::abs(n.pole_residue - pi * chi)});
    }
    r.compact_volume.push_back(kt);
    r.boundary_term.push_back(boundary);
    r.vol_fp_route.push_back(kt + fp_sum);
    three_way = std::max({three_way, rel_diff(r.sweep.value[i], kt + fp_sum), rel_diff(r.sweep.value[i], kt + boundary)});
  }

  auto& v = r.verdicts;
  v.push_back(upper_bound("gauss_residual", r.gauss_residual_sup, tol.gauss, "sup |det A - (kappa0 + 1)|"));
  {
    Verdict p{"principal_curvature_bound", r.principal_curvature_sup < 1.0, true, r.principal_curvature_sup, 1.0,
              1.0 - r.principal_curvature_sup, "sup |lambda| < 1"};
    v.push_back(p);
  }
  const double t_max = *std::max_element(opts.t_grid.begin(), opts.t_grid.end());
  v.push_back(upper_bound("vol_ks_t_independence", r.sweep.spread, tol.cross_validation * (1 + std::exp(2 * t_max)),
                          "spread of vol_ks over the t grid"));
  v.push_back(upper_bound("three_way_agreement", three_way, tol.cross_validation,
                          "vol_ks vs Vol(K_t) + finite parts vs boundary formula, relative"));
  v.push_back(upper_bound("finite_part_formula", fp_formula, tol.finite_part,
                          "symbolic finite part vs -1/4 int H dg_t + t pi chi, relative"));
  v.push_back(upper_bound("finite_part_numeric", fp_numeric, tol.cross_validation,
                          "numeric vs symbolic finite part, relative"));
  v.push_back(upper_bound("pole_residue", pole, tol.pole_residue, "|residue - pi chi| over ends, t grid, both paths"));
  for (const auto& e : r.ends) {
    const std::string s = e.end == End::plus ? "plus" : "minus";
    if (!e.error.empty()) {
      v.push_back({"boundary_metric_" + s, false, true, 0.0, 0.0, 0.0, e.error});
      continue;
    }
    v.push_back(upper_bound("curvature_bound_" + s, e.h0_curvature_max, -4.0 + tol.mesh_curvature,
                            "max vertex curvature of h0 (" + std::to_string(e.h0_vertices_above_bound) +
                                " vertices above)"));
    v.push_back(upper_bound("area_bound_" + s, e.h0_area, -pi * chi / 2.0 + tol.inequality, "area(h0) <= -pi chi / 2"));
    v.push_back(lower_bound("dilation_factor_" + s, e.dilation_factor, 1.0 - tol.inequality, "c >= 1"));
  }
  const bool ends_ok = r.ends[0].error.empty() && r.ends[1].error.empty();
  if (ends_ok) {
    const double worst = std::min({r.chain.zero_margin, r.chain.dilation_margin + tol.inequality,
                                   r.chain.maximality_margin + tol.inequality});
    v.push_back({"inequality_chain", r.chain.holds, true, worst, 0.0, worst,
                 "Vol_R(h0) = 0 <= Vol_R(c^2 h0) <= Vol_R(h_F)"});
  }
  if (ends_ok) v.push_back(lower_bound("positivity", r.vol_r_canonical, -tol.cross_validation * r.g0_area, "Vol_R >= 0"));
  if (ends_ok && (r.kind == BundleKind::fuchsian || r.amplitude == 0.0)) {
    v.push_back(upper_bound("fuchsian_zero", std::abs(r.vol_r_canonical), tol.cross_validation,
                            "Vol_R = 0 at the Fuchsian locus"));
  }
  {
    Verdict c = upper_bound("codazzi_residual", r.codazzi_residual_sup, 1.0, "diagnostic; sup of the edge proxy");
    c.asserted = false;
    v.push_back(c);
  }
  return r;
}

}  // namespace renvol
