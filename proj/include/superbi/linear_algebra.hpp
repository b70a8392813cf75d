// Copyright 2026 The superbi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "superbi/param_scalar.hpp"

namespace superbi {

/// Dense row-major matrix over the field Q(nu1, nu2, nu3).
class ParamMatrix {
 public:
  ParamMatrix() = default;
  ParamMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  ParamScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const ParamScalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ParamScalar> entries_;
};

/// Rank over the fraction field.
std::size_t rank(ParamMatrix m);

/// Unique x with a x = b. Throws SingularSystem if the columns of a are
/// dependent, InvalidArgument on a shape mismatch, and InvariantViolation
/// if the system is inconsistent.
std::vector<ParamScalar> solve(ParamMatrix a, std::vector<ParamScalar> b);

/// Unique X with a X = b, column by column, under the same conditions.
ParamMatrix solve(ParamMatrix a, ParamMatrix b);

}  // namespace superbi
