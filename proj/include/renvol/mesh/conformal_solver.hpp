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

// Prescribed-curvature solver under discrete conformal vertex scaling.
//
// Unknown: a conformal factor omega per vertex. Residual per vertex:
//
//   F_v(omega) = defect_v(omega) - kappa_v * dual_area_v(omega)
//
// where both terms are evaluated on the scaled metric. F = 0 means the
// pointwise curvature defect/dual_area equals the target at every vertex.
// The Jacobian is assembled analytically: the defect part is the cotangent
// Laplacian of the scaled metric, the area part uses
// dA/domega_i = A (1 + cot_j cot_k) / 2 for the corners (i, j, k) of a face.

#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "renvol/error.hpp"
#include "renvol/log.hpp"
#include "renvol/mesh/curvature.hpp"
#include "renvol/tolerances.hpp"

namespace renvol {

struct SolverOptions {
  /// Sup-norm of pointwise curvature residual required for success.
  double tolerance = Tolerances{}.solver;
  int max_iterations = 60;
  int max_halvings = 40;
};

struct ConformalSolution {
  VertexField omega;
  DiscreteMetric metric;   // conformal_scale(input, omega)
  double residual = 0;     // certified sup |curvature - target| on `metric`
  int iterations = 0;
  std::vector<double> history;  // Newton pointwise residual per iteration
};

/// Residual map and Jacobian of the prescribed-curvature problem. Exposed so
/// the Jacobian can be checked against finite differences.
class CurvatureProblem {
 public:
  CurvatureProblem(const TriMesh& mesh, const DiscreteMetric& metric, VertexField target)
      : mesh_(mesh), metric_(metric), target_(std::move(target)) {
    if (target_.size() != mesh.num_vertices())
      throw DomainError("target curvature field has wrong size");
  }

  struct Evaluation {
    Eigen::VectorXd residual;   // F_v
    Eigen::VectorXd dual_area;  // dual_v(omega)
    double pointwise_sup = 0;   // sup |F_v / dual_v|
  };

  /// Scaled face lengths, or nullopt with the first failing face recorded.
  std::optional<std::vector<TriangleLengths>> scaled_faces(const Eigen::VectorXd& omega, int* bad_face = nullptr) const {
    std::vector<TriangleLengths> out(mesh_.num_faces());
    for (int f = 0; f < mesh_.num_faces(); ++f) {
      const auto& t = mesh_.face(f);
      const auto l = metric_.face_lengths(mesh_, f);
      for (int k = 0; k < 3; ++k) {
        const int i = t[(k + 1) % 3], j = t[(k + 2) % 3];
        out[f][k] = std::exp(0.5 * (omega[i] + omega[j])) * l[k];
      }
      if (!satisfies_triangle_inequality(out[f]) || !(triangle_area(out[f]) > 0)) {
        if (bad_face) *bad_face = f;
        return std::nullopt;
      }
    }
    return out;
  }

  std::optional<Evaluation> evaluate(const Eigen::VectorXd& omega, int* bad_face = nullptr) const {
    auto faces = scaled_faces(omega, bad_face);
    if (!faces) return std::nullopt;
    const int nv = mesh_.num_vertices();
    Eigen::VectorXd defect = Eigen::VectorXd::Constant(nv, 2.0 * std::numbers::pi);
    Evaluation ev;
    ev.dual_area = Eigen::VectorXd::Zero(nv);
    for (int f = 0; f < mesh_.num_faces(); ++f) {
      const auto g = triangle_geometry((*faces)[f]);
      const auto& t = mesh_.face(f);
      for (int c = 0; c < 3; ++c) {
        defect[t[c]] -= g.angle[c];
        ev.dual_area[t[c]] += g.area / 3.0;
      }
    }
    ev.residual.resize(nv);
    for (int v = 0; v < nv; ++v) {
      ev.residual[v] = defect[v] - target_[v] * ev.dual_area[v];
      ev.pointwise_sup = std::max(ev.pointwise_sup, std::abs(ev.residual[v] / ev.dual_area[v]));
    }
    return ev;
  }

  /// dF/domega at omega. Throws MetricError if omega breaks a triangle.
  Eigen::SparseMatrix<double> jacobian(const Eigen::VectorXd& omega) const {
    int bad = -1;
    auto faces = scaled_faces(omega, &bad);
    if (!faces) throw MetricError("jacobian: triangle inequality violated on face " + std::to_string(bad), bad);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(mesh_.num_faces() * 18);
    for (int f = 0; f < mesh_.num_faces(); ++f) {
      const auto g = triangle_geometry((*faces)[f]);
      const auto& t = mesh_.face(f);
      double darea[3];
      for (int c = 0; c < 3; ++c)
        darea[c] = 0.5 * g.area * (1.0 + g.cot[(c + 1) % 3] * g.cot[(c + 2) % 3]);
      for (int c = 0; c < 3; ++c) {
        const int a = t[c], b = t[(c + 1) % 3], d = t[(c + 2) % 3];
        const double cot_b = g.cot[(c + 1) % 3], cot_d = g.cot[(c + 2) % 3];
        // d(theta_a)/d(omega_b) = cot(theta_d)/2, d(theta_a)/d(omega_a) = -(cot_b + cot_d)/2.
        trip.emplace_back(a, a, 0.5 * (cot_b + cot_d));
        trip.emplace_back(a, b, -0.5 * cot_d);
        trip.emplace_back(a, d, -0.5 * cot_b);
        for (int x = 0; x < 3; ++x) trip.emplace_back(a, t[x], -target_[a] * darea[x] / 3.0);
      }
    }
    Eigen::SparseMatrix<double> J(mesh_.num_vertices(), mesh_.num_vertices());
    J.setFromTriplets(trip.begin(), trip.end());
    return J;
  }

  const TriMesh& mesh() const { return mesh_; }
  const DiscreteMetric& metric() const { return metric_; }
  const VertexField& target() const { return target_; }

 private:
  const TriMesh& mesh_;
  const DiscreteMetric& metric_;
  VertexField target_;
};

namespace solver_detail {

inline double constant_initial_guess(const TriMesh& mesh, const DiscreteMetric& metric, const VertexField& target) {
  // Constant omega0 with sum_v target_v e^{2 omega0} dual_v = 2 pi chi.
  const auto dual = dual_areas(mesh, metric);
  double weighted = 0;
  for (int v = 0; v < mesh.num_vertices(); ++v) weighted += target[v] * dual[v];
  return 0.5 * std::log(2.0 * std::numbers::pi * mesh.euler_characteristic() / weighted);
}

}  // namespace solver_detail

/// Damped Newton solve for omega such that conformal_scale(metric, omega) has
/// pointwise curvature kappa_target. The result is re-validated through
/// conformal_scale + vertex_curvature before it is returned.
inline ConformalSolution prescribe_curvature(const TriMesh& mesh, const DiscreteMetric& metric,
                                             const VertexField& kappa_target, const SolverOptions& opts = {}) {
  if (mesh.euler_characteristic() >= 0)
    throw DomainError("prescribe_curvature: negative target curvature requires chi < 0 (Gauss-Bonnet), got chi = " +
                      std::to_string(mesh.euler_characteristic()));
  if (kappa_target.size() != mesh.num_vertices() || !kappa_target.all_finite())
    throw DomainError("prescribe_curvature: target field has wrong size or non-finite entries");
  for (int v = 0; v < kappa_target.size(); ++v)
    if (!(kappa_target[v] < 0))
      throw DomainError("prescribe_curvature: target curvature must be strictly negative (vertex " +
                        std::to_string(v) + ")");
  if (!(opts.tolerance > 0)) throw DomainError("prescribe_curvature: tolerance must be positive");

  CurvatureProblem problem(mesh, metric, kappa_target);
  const int nv = mesh.num_vertices();
  Eigen::VectorXd omega =
      Eigen::VectorXd::Constant(nv, solver_detail::constant_initial_guess(mesh, metric, kappa_target));

  int bad = -1;
  auto ev = problem.evaluate(omega, &bad);
  if (!ev) throw SolverError("initial guess breaks triangle on face " + std::to_string(bad), 0);

  ConformalSolution sol;
  sol.history.push_back(ev->pointwise_sup);
  const double goal = 1e-3 * opts.tolerance;
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
  bool pattern_ready = false;
  int it = 0;
  for (; it < opts.max_iterations && ev->pointwise_sup > goal; ++it) {
    const auto J = problem.jacobian(omega);
    if (!pattern_ready) {
      lu.analyzePattern(J);
      pattern_ready = true;
    }
    lu.factorize(J);
    if (lu.info() != Eigen::Success) throw SolverError("Jacobian factorization failed", it, ev->pointwise_sup);
    const Eigen::VectorXd step = lu.solve(-ev->residual);
    if (!step.allFinite()) throw SolverError("Newton step is not finite", it, ev->pointwise_sup);

    const double merit = ev->residual.norm();
    double alpha = 1.0;
    bool accepted = false;
    bool triangle_breakdown = false;
    for (int h = 0; h < opts.max_halvings; ++h, alpha *= 0.5) {
      const Eigen::VectorXd trial = omega + alpha * step;
      auto trial_ev = problem.evaluate(trial, &bad);
      if (!trial_ev) {
        triangle_breakdown = true;
        continue;
      }
      if (trial_ev->residual.norm() < merit) {
        omega = trial;
        ev = std::move(trial_ev);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (ev->pointwise_sup <= opts.tolerance) break;  // stagnated at roundoff
      if (triangle_breakdown)
        throw SolverError("triangle inequality breakdown during line search at iteration " + std::to_string(it) +
                              " (face " + std::to_string(bad) + ")",
                          it, ev->pointwise_sup);
      throw SolverError("residual stagnated at " + std::to_string(ev->pointwise_sup) +
                            " (target infeasible on this mesh?)",
                        it, ev->pointwise_sup);
    }
    sol.history.push_back(ev->pointwise_sup);
    log::debug("newton it " + std::to_string(it) + " alpha " + std::to_string(alpha) + " residual " +
               std::to_string(ev->pointwise_sup));
  }
  if (ev->pointwise_sup > opts.tolerance)
    throw SolverError("no convergence after " + std::to_string(it) + " iterations (residual " +
                          std::to_string(ev->pointwise_sup) + ")",
                      it, ev->pointwise_sup);

  sol.omega = VertexField(std::vector<double>(omega.data(), omega.data() + nv));
  sol.iterations = it;
  sol.metric = conformal_scale(mesh, metric, sol.omega);
  // Independent certificate on the public curvature path.
  const auto k = vertex_curvature(mesh, sol.metric);
  double cert = 0;
  for (int v = 0; v < nv; ++v) cert = std::max(cert, std::abs(k.pointwise(v) - kappa_target[v]));
  sol.residual = cert;
  if (cert > opts.tolerance)
    throw SolverError("certificate failed: curvature residual " + std::to_string(cert) + " above tolerance", it, cert);
  return sol;
}

/// Conformal factor giving constant curvature `target` (< 0) everywhere.
inline ConformalSolution uniformize(const TriMesh& mesh, const DiscreteMetric& metric, double target,
                                    const SolverOptions& opts = {}) {
  if (!(target < 0)) throw DomainError("uniformize: target curvature must be negative");
  if (mesh.euler_characteristic() >= 0)
    throw DomainError("uniformize: chi = " + std::to_string(mesh.euler_characteristic()) +
                      " admits no metric of negative constant curvature (Gauss-Bonnet)");
  return prescribe_curvature(mesh, metric, VertexField(mesh.num_vertices(), target), opts);
}

}  // namespace renvol
