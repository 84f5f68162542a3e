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
#include <vector>

namespace renvol {

namespace field_detail {

template <class Tag>
struct ScalarField {
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(std::vector<double> v) : values(std::move(v)) {}
  ScalarField(int n, double fill) : values(n, fill) {}

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[i]; }
  double& operator[](int i) { return values[i]; }

  double max() const { return *std::max_element(values.begin(), values.end()); }
  double min() const { return *std::min_element(values.begin(), values.end()); }
  double sup_norm() const {
    double s = 0;
    for (double v : values) s = std::max(s, std::abs(v));
    return s;
  }
  bool all_finite() const {
    return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
  }

  ScalarField operator+(const ScalarField& o) const {
    ScalarField r = *this;
    for (int i = 0; i < size(); ++i) r.values[i] += o.values[i];
    return r;
  }
  ScalarField operator-(const ScalarField& o) const {
    ScalarField r = *this;
    for (int i = 0; i < size(); ++i) r.values[i] -= o.values[i];
    return r;
  }
  ScalarField operator*(double s) const {
    ScalarField r = *this;
    for (double& v : r.values) v *= s;
    return r;
  }
  ScalarField operator+(double s) const {
    ScalarField r = *this;
    for (double& v : r.values) v += s;
    return r;
  }
  bool operator==(const ScalarField&) const = default;
};

struct VertexTag {};
struct FaceTag {};
struct EdgeTag {};

}  // namespace field_detail

/// One real value per vertex (conformal factors, curvature densities, ...).
using VertexField = field_detail::ScalarField<field_detail::VertexTag>;
/// One real value per face.
using FaceField = field_detail::ScalarField<field_detail::FaceTag>;
/// One real value per edge.
using EdgeField = field_detail::ScalarField<field_detail::EdgeTag>;

}  // namespace renvol
