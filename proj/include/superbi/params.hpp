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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "superbi/param_scalar.hpp"

namespace superbi {

using ParamPoint = std::array<Rational, 3>;

/// Binding for nu1, nu2, nu3: either the symbols themselves or rational
/// constants. Every builder takes one, so the same code path serves both the
/// symbolic and the evaluated verification modes.
class Params {
 public:
  static Params symbolic();
  static Params at(const ParamPoint& point);

  bool is_symbolic() const noexcept { return !point_.has_value(); }
  const std::optional<ParamPoint>& point() const noexcept { return point_; }

  /// nu_j for j in {1, 2, 3}.
  const ParamScalar& nu(int j) const;
  /// Sum of nu_j over the digits of a label such as 12 or 123.
  ParamScalar nu_sum(int digits) const;

  /// Maps a symbolic scalar into this binding (identity when symbolic).
  ParamScalar bind(const ParamScalar& symbolic_value) const;

  /// "symbolic" or "nu1=1/2,nu2=3/5,nu3=-7/11".
  std::string describe() const;

 private:
  std::array<ParamScalar, 3> nu_;
  std::optional<ParamPoint> point_;
};

/// Parses "nu1=r,nu2=r,nu3=r" (any order, all three required).
ParamPoint parse_param_point(const std::string& text);

/// Draws rational points with numerators in [-97, 97] and prime denominators,
/// rejecting points on which any registered polynomial vanishes.
class GenericPointSampler {
 public:
  explicit GenericPointSampler(std::uint64_t seed) : rng_(seed) {}

  void avoid(const ParamPolynomial& p);
  void avoid(const ParamScalar& s) { avoid(s.den()); }
  std::size_t avoided_count() const noexcept { return avoid_.size(); }
  ParamPoint sample();

 private:
  std::mt19937_64 rng_;
  std::vector<ParamPolynomial> avoid_;
};

/// Denominators (and a few other factors) that must stay nonzero for the
/// eigenbasis and tridiagonal coefficient formulas up to the given N.
std::vector<ParamPolynomial> degeneracy_loci(int max_n);

}  // namespace superbi
