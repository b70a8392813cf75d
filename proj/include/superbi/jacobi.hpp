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

#include <map>
#include <string>

#include "superbi/params.hpp"
#include "superbi/report.hpp"
#include "superbi/superspace.hpp"

namespace superbi {

/// Polynomial in one formal variable z with ParamScalar coefficients.
class ParamUnivariate {
 public:
  using Terms = std::map<int, ParamScalar>;

  ParamUnivariate() = default;
  static ParamUnivariate constant(const ParamScalar& c);
  static ParamUnivariate monomial(const ParamScalar& c, int degree);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  ParamScalar coefficient(int degree) const;

  void add_term(int degree, const ParamScalar& c);
  ParamUnivariate& operator+=(const ParamUnivariate& rhs);
  ParamUnivariate& operator-=(const ParamUnivariate& rhs);
  friend ParamUnivariate operator+(ParamUnivariate a, const ParamUnivariate& b) { return a += b; }
  friend ParamUnivariate operator-(ParamUnivariate a, const ParamUnivariate& b) { return a -= b; }
  friend ParamUnivariate operator*(const ParamScalar& c, const ParamUnivariate& p);
  friend ParamUnivariate operator*(const ParamUnivariate& a, const ParamUnivariate& b);
  friend bool operator==(const ParamUnivariate& a, const ParamUnivariate& b) {
    return a.terms_ == b.terms_;
  }

  ParamUnivariate derivative() const;
  /// Multiplies by z^n.
  ParamUnivariate shift(int n) const;
  /// p(a + b z).
  ParamUnivariate compose_affine(const ParamScalar& a, const ParamScalar& b) const;
  /// u^total_degree * p(v / u); requires degree() <= total_degree.
  UVPolynomial homogenize(int total_degree) const;

  std::string to_string(const std::string& variable = "z") const;

 private:
  Terms terms_;
};

/// P_k^(alpha,beta)(x) from the terminating 2F1 sum with prefactor
/// (alpha+1)_k / k!. Only the polynomial ratios (alpha+1)_k / (alpha+1)_j
/// appear, so no parameter denominators are introduced. k = -1 gives 0.
ParamUnivariate jacobi(int k, const ParamScalar& alpha, const ParamScalar& beta);

/// P_k^(alpha,beta)(1 + 2t) as a polynomial in t.
ParamUnivariate jacobi_shifted(int k, const ParamScalar& alpha, const ParamScalar& beta);

/// Contiguity identities for 0 <= k <= max_k (alpha = nu1, beta = nu2 of the
/// binding) and the hypergeometric ODE reductions on the odd and even
/// eigenbasis profiles for 0 <= k <= N <= max_k.
VerificationReport verify_jacobi_identities(int max_k, const Params& params);

}  // namespace superbi
