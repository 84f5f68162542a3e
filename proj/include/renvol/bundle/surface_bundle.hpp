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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "renvol/bundle/lambda_recipe.hpp"
#include "renvol/bundle/shape_field.hpp"
#include "renvol/mesh/curvature.hpp"
#include "renvol/tolerances.hpp"

namespace renvol {

enum class BundleKind { fuchsian, almost_fuchsian, custom };

inline std::string to_string(BundleKind k) {
  switch (k) {
    case BundleKind::fuchsian: return "fuchsian";
    case BundleKind::almost_fuchsian: return "almost_fuchsian";
    case BundleKind::custom: return "custom";
  }
  return "custom";
}

inline BundleKind bundle_kind_from_string(const std::string& s) {
  if (s == "fuchsian") return BundleKind::fuchsian;
  if (s == "almost_fuchsian" || s == "almost-fuchsian") return BundleKind::almost_fuchsian;
  if (s == "custom") return BundleKind::custom;
  throw DomainError("unknown bundle kind '" + s + "'");
}

struct BundleMeta {
  double amplitude = 0.0;
  Tolerances tolerances;
  std::optional<LambdaRecipe> recipe;
  std::optional<std::uint64_t> seed;
};

/// The discrete datum of a minimal surface in an almost-Fuchsian manifold:
/// mesh, metric g0, shape operator A, and the derived per-face curvature and
/// residual caches. Immutable; the mesh is shared between copies.
class SurfaceBundle {
 public:
  SurfaceBundle() = default;

  /// Computes kappa0 and both residual fields. Does not enforce tolerances;
  /// see validate_bundle.
  static SurfaceBundle assemble(std::shared_ptr<const TriMesh> mesh, DiscreteMetric g0, ShapeField shape,
                                BundleKind kind, BundleMeta meta = {}) {
    if (static_cast<int>(shape.size()) != mesh->num_faces())
      throw DomainError("shape field has " + std::to_string(shape.size()) + " entries for " +
                        std::to_string(mesh->num_faces()) + " faces");
    SurfaceBundle b;
    b.mesh_ = std::move(mesh);
    b.g0_ = std::move(g0);
    b.shape_ = std::move(shape);
    b.kind_ = kind;
    b.meta_ = std::move(meta);
    b.recompute();
    return b;
  }

  const TriMesh& mesh() const { return *mesh_; }
  std::shared_ptr<const TriMesh> mesh_ptr() const { return mesh_; }
  const DiscreteMetric& g0() const { return g0_; }
  const ShapeField& shape() const { return shape_; }
  const SymMat2& shape(int f) const { return shape_[f]; }
  BundleKind kind() const { return kind_; }
  const BundleMeta& meta() const { return meta_; }

  /// Face areas of g0.
  const std::vector<double>& face_areas() const { return face_areas_; }
  double area() const { return area_; }
  /// Vertex curvature of g0 averaged over the three corners of each face.
  const FaceField& kappa0() const { return kappa0_; }
  const CurvatureField& vertex_curvature_g0() const { return vertex_curvature_; }
  /// det A - (kappa0 + 1) per face.
  const FaceField& gauss_residual() const { return gauss_residual_; }
  /// Edge-based Codazzi proxy; diagnostic only.
  const EdgeField& codazzi_residual() const { return codazzi_residual_; }
  const std::vector<std::array<Vec2, 3>>& frames() const { return frames_; }

  int euler_characteristic() const { return mesh_->euler_characteristic(); }

 private:
  void recompute() {
    const TriMesh& m = *mesh_;
    face_areas_ = g0_.face_areas(m);
    area_ = 0;
    for (double a : face_areas_) area_ += a;
    frames_ = face_frames(m, g0_);
    vertex_curvature_ = renvol::vertex_curvature(m, g0_);
    kappa0_ = FaceField(m.num_faces(), 0.0);
    gauss_residual_ = FaceField(m.num_faces(), 0.0);
    for (int f = 0; f < m.num_faces(); ++f) {
      double k = 0;
      for (int v : m.face(f)) k += vertex_curvature_.pointwise(v);
      kappa0_[f] = k / 3.0;
      gauss_residual_[f] = shape_[f].det() - (kappa0_[f] + 1.0);
    }
    codazzi_residual_ = EdgeField(m.num_edges(), 0.0);
    for (int e = 0; e < m.num_edges(); ++e) {
      double ii[2];
      for (int s = 0; s < 2; ++s) {
        const int f = m.edge_faces(e)[s];
        int k = 0;
        while (m.face_edge(f, k) != e) ++k;
        const Vec2 dir = frames_[f][(k + 2) % 3] - frames_[f][(k + 1) % 3];
        ii[s] = shape_[f].quadratic(dir.normalized());
      }
      codazzi_residual_[e] = std::abs(ii[0] - ii[1]) / g0_.length(e);
    }
  }

  std::shared_ptr<const TriMesh> mesh_;
  DiscreteMetric g0_;
  ShapeField shape_;
  BundleKind kind_ = BundleKind::custom;
  BundleMeta meta_;

  std::vector<double> face_areas_;
  double area_ = 0;
  std::vector<std::array<Vec2, 3>> frames_;
  CurvatureField vertex_curvature_;
  FaceField kappa0_;
  FaceField gauss_residual_;
  EdgeField codazzi_residual_;
};

struct GaussResidual {
  FaceField per_face;
  double sup = 0;
};

inline GaussResidual gauss_residual(const SurfaceBundle& bundle) {
  return {bundle.gauss_residual(), bundle.gauss_residual().sup_norm()};
}

struct CodazziResidual {
  EdgeField per_edge;
  double sup = 0;
  double mean = 0;
};

/// For each edge, the jump of II(u, u) across the edge (u the unit edge
/// vector in each adjacent face frame), divided by the edge length.
inline CodazziResidual codazzi_residual(const SurfaceBundle& bundle) {
  CodazziResidual r{bundle.codazzi_residual(), bundle.codazzi_residual().sup_norm(), 0.0};
  for (double v : r.per_edge.values) r.mean += v;
  if (r.per_edge.size() > 0) r.mean /= r.per_edge.size();
  return r;
}

/// (lambda1, lambda2), lambda1 >= lambda2, per face.
inline std::vector<std::pair<double, double>> principal_curvatures(const SurfaceBundle& bundle) {
  std::vector<std::pair<double, double>> out(bundle.mesh().num_faces());
  for (int f = 0; f < bundle.mesh().num_faces(); ++f) out[f] = bundle.shape(f).eigenvalues();
  return out;
}

/// max over faces of max(|lambda1|, |lambda2|).
inline double sup_principal_curvature(const SurfaceBundle& bundle) {
  double s = 0;
  for (const auto& [l1, l2] : principal_curvatures(bundle)) s = std::max({s, std::abs(l1), std::abs(l2)});
  return s;
}

inline double sup_mean_curvature(const SurfaceBundle& bundle) {
  double s = 0;
  for (const auto& m : bundle.shape()) s = std::max(s, std::abs(m.trace()));
  return s;
}

struct BundleValidation {
  double gauss_sup = 0;
  double principal_sup = 0;
  double mean_curvature_sup = 0;
  bool chi_negative = false;
  bool gauss_ok = false;
  bool principal_ok = false;
  bool ok() const { return chi_negative && gauss_ok && principal_ok; }
  std::string summary() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "gauss_sup=%.3e (%s) sup|lambda|=%.6f (%s) sup|H0|=%.3e chi<0: %s", gauss_sup,
                  gauss_ok ? "ok" : "FAIL", principal_sup, principal_ok ? "ok" : "FAIL", mean_curvature_sup,
                  chi_negative ? "yes" : "NO");
    return buf;
  }
};

inline BundleValidation validate_bundle(const SurfaceBundle& bundle, const Tolerances& tol) {
  BundleValidation v;
  v.gauss_sup = bundle.gauss_residual().sup_norm();
  v.principal_sup = sup_principal_curvature(bundle);
  v.mean_curvature_sup = sup_mean_curvature(bundle);
  v.chi_negative = bundle.euler_characteristic() < 0;
  v.gauss_ok = v.gauss_sup <= tol.gauss;
  v.principal_ok = v.principal_sup < 1.0;
  return v;
}

}  // namespace renvol
