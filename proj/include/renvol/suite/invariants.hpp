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

// The invariant suite: ten property checks over generated bundles on a
// genus >= 2 mesh. Shared by the `check` command and the acceptance binary.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "renvol/bundle/generator.hpp"
#include "renvol/volume/canonical.hpp"

namespace renvol {

struct SuiteMesh {
  std::string label;
  std::shared_ptr<const TriMesh> mesh;
};

struct SuiteOptions {
  /// The first mesh carries the random bundles and the solver checks; every
  /// mesh gets the Fuchsian bundle and the fixed amplitudes.
  std::vector<SuiteMesh> meshes;
  std::vector<double> amplitudes = {0.25, 0.5, 0.75};
  std::uint64_t seed = 1;
  int random_bundles = 20;
  /// Random bundle amplitudes are drawn uniformly from [lo, hi).
  double random_amplitude_lo = 0.05;
  double random_amplitude_hi = 0.9;
  int perturbations = 50;
  Tolerances tolerances;
  std::vector<double> t_grid = default_t_grid();
  std::vector<double> z_grid = default_z_grid();
  /// Called with a progress line per generated bundle.
  std::function<void(const std::string&)> progress;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<Verdict> checks;
};

struct BundleCase {
  std::string label;
  std::string mesh_label;
  double amplitude = 0;
  bool random = false;
  std::optional<std::uint64_t> seed;
  std::optional<SurfaceBundle> bundle;
  std::optional<VolumeReport> report;
  std::string error;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  std::vector<BundleCase> cases;
  bool passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed; });
  }
};

namespace suite_detail {

inline std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

class Collector {
 public:
  void add(Verdict v) {
    if (!v.passed && first_failure_.empty()) first_failure_ = v.name + ": " + fmt("%.6g vs %.6g", v.value, v.threshold);
    worst_ = std::min(worst_, v.margin);
    checks_.push_back(std::move(v));
  }
  void fail(std::string name, std::string why) {
    if (first_failure_.empty()) first_failure_ = name + ": " + why;
    checks_.push_back({std::move(name), false, true, 0, 0, 0, std::move(why)});
  }
  CriterionResult finish(int id, std::string name, std::string summary) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.passed = !checks_.empty() &&
               std::all_of(checks_.begin(), checks_.end(), [](const Verdict& v) { return v.passed || !v.asserted; });
    r.detail = r.passed ? summary : first_failure_;
    r.checks = std::move(checks_);
    return r;
  }
  double worst_margin() const { return worst_; }

 private:
  std::vector<Verdict> checks_;
  std::string first_failure_;
  double worst_ = std::numeric_limits<double>::infinity();
};

inline BundleCase build_case(const SuiteMesh& sm, double s, std::optional<std::uint64_t> seed, bool random,
                             const SuiteOptions& opts, const ReportOptions& ropts) {
  BundleCase c;
  c.mesh_label = sm.label;
  c.amplitude = s;
  c.random = random;
  c.seed = seed;
  c.label = sm.label + (s == 0 ? std::string(" fuchsian") : fmt(" s=%.4f", s)) +
            (seed ? " seed=" + std::to_string(*seed) : std::string());
  try {
    const auto g = induced_metric(*sm.mesh);
    c.bundle = s == 0 ? make_fuchsian(sm.mesh, g, opts.tolerances)
                      : make_almost_fuchsian(sm.mesh, g, s, seed, opts.tolerances);
  } catch (const Error& e) {
    c.error = std::string("generation: ") + e.what();
    return c;
  }
  try {
    c.report = renormalized_volume_canonical(*c.bundle, ropts);
    for (const auto& e : c.report->ends)
      if (!e.error.empty() && c.error.empty()) c.error = std::string("boundary metric ") + to_string(e.end) + ": " + e.error;
  } catch (const Error& e) {
    c.error = std::string("volume pipeline: ") + e.what();
  }
  return c;
}

inline double tmax(const std::vector<double>& g) { return *std::max_element(g.begin(), g.end()); }

}  // namespace suite_detail

/// Criterion 1: vol_ks(t) and the canonical volume vanish on Fuchsian bundles.
inline CriterionResult check_fuchsian_zero(const std::vector<BundleCase>& cases, const Tolerances& tol) {
  suite_detail::Collector col;
  double worst = 0;
  for (const auto& c : cases) {
    if (c.amplitude != 0) continue;
    if (!c.report) {
      col.fail(c.label, c.error);
      continue;
    }
    const auto& r = *c.report;
    for (std::size_t i = 0; i < r.sweep.t.size(); ++i) {
      const double t = r.sweep.t[i];
      col.add(upper_bound(c.label + suite_detail::fmt(" vol_ks(%g)", t), std::abs(r.sweep.value[i]),
                          tol.cross_validation * (1 + std::exp(2 * t))));
      worst = std::max(worst, std::abs(r.sweep.value[i]));
    }
    col.add(upper_bound(c.label + " vol_r_canonical", std::abs(r.vol_r_canonical), tol.cross_validation));
    worst = std::max(worst, std::abs(r.vol_r_canonical));
  }
  return col.finish(1, "Fuchsian zero", suite_detail::fmt("max |vol| = %.3e", worst));
}

/// Criterion 2: vol_ks is constant over the t grid.
inline CriterionResult check_t_independence(const std::vector<BundleCase>& cases, const Tolerances& tol,
                                            const std::vector<double>& amplitudes) {
  suite_detail::Collector col;
  double worst = 0, bound = 0;
  for (const auto& c : cases) {
    if (c.random || (c.amplitude != 0 && std::find(amplitudes.begin(), amplitudes.end(), c.amplitude) == amplitudes.end()))
      continue;
    if (!c.report) {
      col.fail(c.label, c.error);
      continue;
    }
    const auto& s = c.report->sweep;
    bound = tol.cross_validation * (1 + std::exp(2 * suite_detail::tmax(s.t)));
    col.add(upper_bound(c.label + " spread", s.spread, bound));
    worst = std::max(worst, s.spread);
  }
  return col.finish(2, "t-independence", suite_detail::fmt("max spread %.3e (bound %.3e)", worst, bound));
}

/// Criteria 3 and 4 at t in {0, 1, 2}: the symbolic finite part against the
/// boundary-term formula, the numeric fit against the symbolic value, and the
/// pole residue of both paths against pi chi.
inline std::pair<CriterionResult, CriterionResult> check_finite_parts(const std::vector<BundleCase>& cases,
                                                                      const Tolerances& tol,
                                                                      const std::vector<double>& z_grid) {
  suite_detail::Collector fp, pole;
  double w_formula = 0, w_numeric = 0, w_pole = 0;
  for (const auto& c : cases) {
    if (!c.bundle) continue;
    const auto& b = *c.bundle;
    const double pi_chi = std::numbers::pi * b.euler_characteristic();
    for (double t : {0.0, 1.0, 2.0}) {
      for (End e : kEnds) {
        const std::string tag = c.label + suite_detail::fmt(" t=%g ", t) + to_string(e);
        try {
          const auto sym = riesz_fp_symbolic(b, t, e);
          const auto num = riesz_fp_numeric(b, t, e, z_grid);
          const double formula = -0.25 * mean_curvature_integral(b, t, e) + t * pi_chi;
          const double d1 = suite_detail::rel(sym.fp, formula), d2 = suite_detail::rel(num.fp, sym.fp);
          fp.add(upper_bound(tag + " symbolic", d1, tol.finite_part));
          fp.add(upper_bound(tag + " numeric", d2, tol.cross_validation));
          const double p1 = std::abs(sym.pole_residue - pi_chi), p2 = std::abs(num.pole_residue - pi_chi);
          pole.add(upper_bound(tag + " symbolic residue", p1, tol.pole_residue));
          pole.add(upper_bound(tag + " fitted residue", p2, tol.pole_residue));
          w_formula = std::max(w_formula, d1);
          w_numeric = std::max(w_numeric, d2);
          w_pole = std::max({w_pole, p1, p2});
        } catch (const Error& ex) {
          fp.fail(tag, ex.what());
          pole.fail(tag, ex.what());
        }
      }
    }
  }
  return {fp.finish(3, "Finite-part equivalence",
                    suite_detail::fmt("symbolic %.3e rel, numeric %.3e rel", w_formula, w_numeric)),
          pole.finish(4, "Pole residue", suite_detail::fmt("max |residue - pi chi| = %.3e", w_pole))};
}

/// Criterion 5: vertex curvature of h0 stays below -4, and the leaf curvature
/// at t = 8 matches the closed-form limit.
inline CriterionResult check_curvature_bound(const std::vector<BundleCase>& cases, const Tolerances& tol,
                                             const std::vector<double>& amplitudes) {
  suite_detail::Collector col;
  constexpr double t_far = 8.0, limit_tol = 1e-4;
  double kmax = -std::numeric_limits<double>::infinity(), limit_err = 0;
  int above = 0, vertices = 0;
  for (const auto& c : cases) {
    if (c.random || std::find(amplitudes.begin(), amplitudes.end(), c.amplitude) == amplitudes.end()) continue;
    if (!c.bundle) {
      col.fail(c.label, c.error);
      continue;
    }
    const auto& b = *c.bundle;
    for (End e : kEnds) {
      const std::string tag = c.label + " " + to_string(e);
      try {
        const auto h0 = boundary_metric(b, e);
        const auto k = h0.curvature.pointwise();
        int n_above = 0;
        for (double x : k.values)
          if (x > -4.0 + tol.mesh_curvature) ++n_above;
        above += n_above;
        vertices += k.size();
        kmax = std::max(kmax, k.max());
        col.add(upper_bound(tag + " max h0 vertex curvature (" + std::to_string(n_above) + "/" +
                                std::to_string(k.size()) + " above)",
                            k.max(), -4.0 + tol.mesh_curvature));
      } catch (const Error& ex) {
        col.fail(tag + " boundary metric", ex.what());
      }
      const auto leaf = leaf_curvature_scalar(b, t_far, e);
      double err = 0, lmax = -std::numeric_limits<double>::infinity();
      for (int f = 0; f < leaf.size(); ++f) {
        const auto [l1, l2] = b.shape(f).eigenvalues();
        const double scaled = std::exp(2 * t_far) * leaf[f];
        err = std::max(err, std::abs(scaled - limit_curvature_closed_form(std::max(std::abs(l1), std::abs(l2)))));
        lmax = std::max(lmax, scaled);
      }
      limit_err = std::max(limit_err, err);
      col.add(upper_bound(tag + " |e^{2t} kappa_t - closed form| at t=8", err, limit_tol));
      col.add(upper_bound(tag + " max e^{2t} kappa_t at t=8", lmax, -4.0 + limit_tol));
    }
  }
  return col.finish(5, "Curvature bound",
                    suite_detail::fmt("max h0 curvature %.4g; limit error %.3e", kmax, limit_err) + "; " +
                        std::to_string(above) + "/" + std::to_string(vertices) + " vertices above");
}

/// Criterion 6: area bound, c >= 1 and the inequality chain on the random bundles.
inline CriterionResult check_area_chain(const std::vector<BundleCase>& cases, const Tolerances& tol) {
  suite_detail::Collector col;
  int count = 0;
  double min_chain = std::numeric_limits<double>::infinity();
  for (const auto& c : cases) {
    if (!c.random) continue;
    ++count;
    if (!c.report || !c.error.empty()) {
      col.fail(c.label, c.error);
      continue;
    }
    const auto& r = *c.report;
    const double bound = -std::numbers::pi * r.euler_characteristic / 2.0 + tol.inequality;
    for (const auto& e : r.ends) {
      const std::string tag = c.label + " " + to_string(e.end);
      col.add(upper_bound(tag + " area(h0)", e.h0_area, bound));
      col.add(lower_bound(tag + " c", e.dilation_factor, 1.0));
    }
    col.add(upper_bound(c.label + " |Vol_R(h0)|", std::abs(r.chain.vol_r_h0), tol.inequality));
    col.add(lower_bound(c.label + " dilation step", r.chain.dilation_margin, 0.0));
    col.add(lower_bound(c.label + " maximality step", r.chain.maximality_margin, 0.0));
    min_chain = std::min({min_chain, r.chain.dilation_margin, r.chain.maximality_margin});
  }
  return col.finish(6, "Area bound and chain",
                    std::to_string(count) + " random bundles; min chain margin " + suite_detail::fmt("%.3e", min_chain));
}

namespace suite_detail {

/// Smooth random field: a few Gaussian bumps of random sign.
inline VertexField random_smooth_field(const TriMesh& m, recipe_detail::SplitMix64& rng, double scale) {
  const auto [lo, hi] = recipe_detail::bounding_box(m.positions());
  const double diag = (hi - lo).norm();
  const int bumps = 1 + static_cast<int>(rng.next() % 4);
  VertexField w(m.num_vertices(), 0.0);
  for (int k = 0; k < bumps; ++k) {
    const Vec3 c = m.positions()[rng.next() % static_cast<std::uint64_t>(m.num_vertices())];
    const double width = rng.uniform(0.1, 0.4) * diag, a = scale * rng.normal();
    for (int v = 0; v < m.num_vertices(); ++v)
      w[v] += a * std::exp(-(m.positions()[v] - c).squaredNorm() / (2 * width * width));
  }
  return w;
}

}  // namespace suite_detail

/// Criterion 7: perturbing h_F within its conformal class at fixed area does
/// not increase the renormalized volume.
inline CriterionResult check_maximality(const TriMesh& m, const DiscreteMetric& hf, int count, std::uint64_t seed) {
  suite_detail::Collector col;
  constexpr double bound = 1e-9;
  recipe_detail::SplitMix64 rng(seed ^ 0x6d61786dull);
  double worst = -std::numeric_limits<double>::infinity();
  col.add(upper_bound("shift at omega = 0", std::abs(conformal_volume_shift(m, hf, VertexField(m.num_vertices(), 0.0))),
                      1e-12));
  for (int i = 0; i < count; ++i) {
    const auto raw = suite_detail::random_smooth_field(m, rng, 0.5);
    const auto omega = area_renormalized(m, hf, hodge_split(m, hf, raw).perp);
    const double s = conformal_volume_shift(m, hf, omega);
    worst = std::max(worst, s);
    col.add(upper_bound("perturbation " + std::to_string(i), s, bound));
  }
  return col.finish(7, "Maximality", std::to_string(count) + " perturbations; max shift " +
                                         suite_detail::fmt("%.3e", worst));
}

/// Criterion 8: constant omega = ln c shifts the volume by -pi chi ln c.
inline CriterionResult check_dilation(const TriMesh& m, const std::vector<DiscreteMetric>& metrics) {
  suite_detail::Collector col;
  constexpr double bound = 1e-9;
  double worst = 0;
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    for (double c : {0.5, 1.0, 2.0, std::numbers::e}) {
      const double got = conformal_volume_shift(m, metrics[i], VertexField(m.num_vertices(), std::log(c)));
      const double want = dilation_shift(m.euler_characteristic(), c);
      const double err = std::abs(got - want);
      worst = std::max(worst, err);
      col.add(upper_bound("metric " + std::to_string(i) + suite_detail::fmt(" c=%g", c), err, bound));
    }
  }
  return col.finish(8, "Dilation exactness", suite_detail::fmt("max error %.3e", worst));
}

/// Criterion 9: non-negative everywhere, strictly positive for s >= 0.25.
inline CriterionResult check_positivity(const std::vector<BundleCase>& cases, const Tolerances& tol) {
  suite_detail::Collector col;
  double min_strict = std::numeric_limits<double>::infinity();
  for (const auto& c : cases) {
    if (!c.report || !c.error.empty()) {
      col.fail(c.label, c.error);
      continue;
    }
    const auto& r = *c.report;
    const double floor = -tol.cross_validation * r.g0_area;
    col.add(lower_bound(c.label + " Vol_R", r.vol_r_canonical, floor));
    if (c.amplitude >= 0.25) {
      col.add(lower_bound(c.label + " strict margin", r.vol_r_canonical - floor, 10 * tol.cross_validation * r.g0_area));
      min_strict = std::min(min_strict, r.vol_r_canonical);
    }
  }
  return col.finish(9, "Positivity", suite_detail::fmt("min Vol_R for s >= 0.25: %.6g", min_strict));
}

/// Criterion 10: uniformization residual and area, and the Jacobian against
/// central differences.
inline CriterionResult check_solver(const TriMesh& m, const DiscreteMetric& seed_metric,
                                    const std::vector<BundleCase>& cases, const Tolerances& tol, std::uint64_t seed) {
  suite_detail::Collector col;
  const double target = -4.0;
  SolverOptions so;
  so.tolerance = tol.solver;
  double area_err = 0, resid = 0, jac_err = 0;
  try {
    const auto sol = uniformize(m, seed_metric, target, so);
    const double want = 2 * std::numbers::pi * m.euler_characteristic() / target;
    area_err = std::abs(sol.metric.total_area(m) - want);
    resid = sol.residual;
    col.add(upper_bound("seed metric residual", sol.residual, tol.solver));
    col.add(upper_bound("uniformized area", area_err, 1e-7));
  } catch (const Error& e) {
    col.fail("uniformize seed metric", e.what());
  }
  for (const auto& c : cases) {
    if (!c.report) continue;
    for (const auto& e : c.report->ends) {
      if (!e.error.empty()) continue;
      resid = std::max(resid, e.uniformize_residual);
      col.add(upper_bound(c.label + " " + to_string(e.end) + " h0 residual", e.uniformize_residual, tol.solver));
    }
  }

  // Jacobian at a smooth random omega, probed along random directions.
  recipe_detail::SplitMix64 rng(seed ^ 0x6a61636full);
  CurvatureProblem prob(m, seed_metric, VertexField(m.num_vertices(), target));
  const auto w = suite_detail::random_smooth_field(m, rng, 0.2);
  const Eigen::VectorXd omega = Eigen::Map<const Eigen::VectorXd>(w.values.data(), m.num_vertices());
  const auto J = prob.jacobian(omega);
  constexpr double h = 1e-5;
  for (int k = 0; k < 5; ++k) {
    Eigen::VectorXd dir(m.num_vertices());
    for (int v = 0; v < m.num_vertices(); ++v) dir[v] = rng.normal();
    const auto fp = prob.evaluate(omega + h * dir), fm = prob.evaluate(omega - h * dir);
    if (!fp || !fm) {
      col.fail("jacobian probe " + std::to_string(k), "finite-difference step broke a triangle");
      continue;
    }
    const Eigen::VectorXd fd = (fp->residual - fm->residual) / (2 * h);
    const Eigen::VectorXd an = J * dir;
    const double err = (fd - an).norm() / an.norm();
    jac_err = std::max(jac_err, err);
    col.add(upper_bound("jacobian probe " + std::to_string(k), err, 1e-5));
  }
  return col.finish(10, "Solver quality",
                    suite_detail::fmt("residual %.3e, area error %.3e, jacobian %.3e", resid, area_err, jac_err));
}

/// Generates the bundle cases and runs all ten criteria.
inline SuiteResult run_invariant_suite(const SuiteOptions& opts) {
  if (opts.meshes.empty()) throw DomainError("invariant suite needs at least one mesh");
  for (const auto& sm : opts.meshes)
    if (sm.mesh->euler_characteristic() >= 0)
      throw DomainError("invariant suite needs chi < 0; " + sm.label + " has chi = " +
                        std::to_string(sm.mesh->euler_characteristic()));
  ReportOptions ropts;
  ropts.t_grid = opts.t_grid;
  ropts.z_grid = opts.z_grid;
  ropts.tolerances = opts.tolerances;

  SuiteResult res;
  auto add = [&](BundleCase c) {
    if (opts.progress) opts.progress(c.label + (c.error.empty() ? std::string(" ok") : " FAILED: " + c.error));
    res.cases.push_back(std::move(c));
  };
  for (const auto& sm : opts.meshes) {
    add(suite_detail::build_case(sm, 0.0, std::nullopt, false, opts, ropts));
    for (double s : opts.amplitudes) add(suite_detail::build_case(sm, s, std::nullopt, false, opts, ropts));
  }
  recipe_detail::SplitMix64 rng(opts.seed);
  for (int i = 0; i < opts.random_bundles; ++i) {
    const double s = rng.uniform(opts.random_amplitude_lo, opts.random_amplitude_hi);
    const std::uint64_t seed = rng.next();
    add(suite_detail::build_case(opts.meshes.front(), s, seed, true, opts, ropts));
  }

  const auto& tol = opts.tolerances;
  auto& out = res.criteria;
  out.push_back(check_fuchsian_zero(res.cases, tol));
  out.push_back(check_t_independence(res.cases, tol, opts.amplitudes));
  auto [fp, pole] = check_finite_parts(res.cases, tol, opts.z_grid);
  out.push_back(std::move(fp));
  out.push_back(std::move(pole));
  out.push_back(check_curvature_bound(res.cases, tol, opts.amplitudes));
  out.push_back(check_area_chain(res.cases, tol));

  const TriMesh& m = *opts.meshes.front().mesh;
  const auto seed_metric = induced_metric(m);
  // h_F of the + end of the first fixed-amplitude bundle on the first mesh.
  std::optional<DiscreteMetric> hf;
  std::vector<DiscreteMetric> dil_metrics{seed_metric};
  for (const auto& c : res.cases) {
    if (c.mesh_label != opts.meshes.front().label || c.random || c.amplitude == 0 || !c.bundle) continue;
    try {
      SolverOptions so;
      so.tolerance = tol.solver;
      const auto h0 = boundary_metric(*c.bundle, End::plus);
      hf = uniformize(m, h0.metric, -4.0, so).metric;
      dil_metrics.push_back(h0.metric);
      dil_metrics.push_back(*hf);
    } catch (const Error&) {
    }
    break;
  }
  if (hf) {
    out.push_back(check_maximality(m, *hf, opts.perturbations, opts.seed));
  } else {
    CriterionResult r{7, "Maximality", false, "no canonical metric h_F available", {}};
    out.push_back(r);
  }
  out.push_back(check_dilation(m, dil_metrics));
  out.push_back(check_positivity(res.cases, tol));
  out.push_back(check_solver(m, seed_metric, res.cases, tol, opts.seed));
  return res;
}

}  // namespace renvol
