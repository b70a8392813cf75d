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

#include "superbi/linear_algebra.hpp"

#include <limits>
#include <utility>

#include "superbi/errors.hpp"

namespace superbi {
namespace {

std::size_t weight(const ParamScalar& s) {
  return s.num().terms().size() + s.den().terms().size() +
         static_cast<std::size_t>(s.num().total_degree() + s.den().total_degree());
}

// Reduces m (with an optional augmented column) to row echelon form and
// returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(ParamMatrix& m, ParamMatrix* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const std::size_t w = weight(m(r, col));
      if (w < best_weight) {
        best = r;
        best_weight = w;
      }
    }
    if (best == m.rows()) continue;
    if (best != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
      if (rhs) {
        for (std::size_t c = 0; c < rhs->cols(); ++c) std::swap((*rhs)(row, c), (*rhs)(best, c));
      }
    }
    const ParamScalar inv = m(row, col).inverse();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const ParamScalar factor = m(r, col) * inv;
      m(r, col) = ParamScalar();
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
      if (rhs) {
        for (std::size_t c = 0; c < rhs->cols(); ++c) {
          if (!(*rhs)(row, c).is_zero()) (*rhs)(r, c) -= factor * (*rhs)(row, c);
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(ParamMatrix m) { return eliminate(m, nullptr).size(); }

ParamMatrix solve(ParamMatrix a, ParamMatrix b) {
  if (b.rows() != a.rows()) throw InvalidArgument("right-hand side rows do not match");
  const auto pivots = eliminate(a, &b);
  if (pivots.size() != a.cols()) {
    throw SingularSystem("coefficient matrix has rank " + std::to_string(pivots.size()) +
                         " < " + std::to_string(a.cols()));
  }
  for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (!b(r, c).is_zero()) throw InvariantViolation("inconsistent linear system");
    }
  }
  ParamMatrix x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = pivots.size(); i-- > 0;) {
      ParamScalar acc = b(i, j);
      for (std::size_t c = i + 1; c < a.cols(); ++c) {
        if (!a(i, c).is_zero()) acc -= a(i, c) * x(c, j);
      }
      x(i, j) = acc / a(i, i);
    }
  }
  return x;
}

std::vector<ParamScalar> solve(ParamMatrix a, std::vector<ParamScalar> b) {
  ParamMatrix column(b.size(), 1);
  for (std::size_t r = 0; r < b.size(); ++r) column(r, 0) = std::move(b[r]);
  const ParamMatrix x = solve(std::move(a), std::move(column));
  std::vector<ParamScalar> out;
  out.reserve(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) out.push_back(x(r, 0));
  return out;
}

}  // namespace superbi
