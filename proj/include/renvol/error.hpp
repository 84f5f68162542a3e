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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace renvol {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or non-manifold mesh input. `element()` is the offending face,
/// edge, vertex or line index, or -1 when not applicable.
class MeshError : public Error {
 public:
  MeshError(const std::string& what, std::int64_t element = -1)
      : Error(what), element_(element) {}
  std::int64_t element() const { return element_; }

 private:
  std::int64_t element_;
};

/// A metric that violates a triangle inequality, or missing/invalid metric data.
class MetricError : public Error {
 public:
  MetricError(const std::string& what, std::int64_t face = -1) : Error(what), face_(face) {}
  std::int64_t face() const { return face_; }

 private:
  std::int64_t face_;
};

/// Non-convergence or breakdown of an iterative solve.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, int iteration = -1, double residual = -1.0)
      : Error(what), iteration_(iteration), residual_(residual) {}
  int iteration() const { return iteration_; }
  double residual() const { return residual_; }

 private:
  int iteration_;
  double residual_;
};

/// Precondition violations on scalar arguments (amplitude >= 1, c <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace renvol
