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
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "superbi/rational.hpp"

namespace superbi {

/// Exponents of (nu1, nu2, nu3).
using ParamExponents = std::array<std::uint16_t, 3>;

/// Graded-lexicographic order with nu1 > nu2 > nu3. The map iterates in
/// ascending order, so the leading term is the last entry.
struct GrlexLess {
  bool operator()(const ParamExponents& a, const ParamExponents& b) const noexcept {
    const unsigned da = a[0] + a[1] + a[2];
    const unsigned db = b[0] + b[1] + b[2];
    if (da != db) return da < db;
    return a < b;
  }
};

/// Multivariate polynomial in nu1, nu2, nu3 over the rationals. No stored
/// coefficient is zero; the zero polynomial is the empty map.
class ParamPolynomial {
 public:
  using Terms = std::map<ParamExponents, Rational, GrlexLess>;

  ParamPolynomial() = default;
  ParamPolynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  ParamPolynomial(long constant) : ParamPolynomial(Rational(constant)) {}  // NOLINT

  /// nu_{index+1}; index in [0, 3).
  static ParamPolynomial variable(int index);
  static ParamPolynomial monomial(const ParamExponents& exponents, Rational coefficient);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  /// Last term under grlex. Precondition: nonzero.
  const std::pair<const ParamExponents, Rational>& leading_term() const;
  int total_degree() const noexcept;
  int degree_in(int variable) const noexcept;

  ParamPolynomial operator-() const;
  ParamPolynomial& operator+=(const ParamPolynomial& rhs);
  ParamPolynomial& operator-=(const ParamPolynomial& rhs);
  ParamPolynomial& operator*=(const Rational& factor);
  friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
  friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
  friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
  friend ParamPolynomial operator*(ParamPolynomial a, const Rational& b) { return a *= b; }
  friend ParamPolynomial operator*(const Rational& a, ParamPolynomial b) { return b *= a; }
  friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Adds coefficient * x^exponents in place.
  void add_term(const ParamExponents& exponents, const Rational& coefficient);
  /// this += a * b without materializing the product.
  void add_product(const ParamPolynomial& a, const ParamPolynomial& b);

  /// Quotient when divisor divides this exactly, nullopt otherwise.
  std::optional<ParamPolynomial> divide_exact(const ParamPolynomial& divisor) const;

  Rational evaluate(const std::array<Rational, 3>& point) const;
  /// Replaces each nu_i by the given polynomials.
  ParamPolynomial substitute(const std::array<ParamPolynomial, 3>& images) const;
  ParamPolynomial pow(unsigned exponent) const;

  /// "2*nu1^2 - nu2 + 1/2", terms in descending grlex order; "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Splits p = unit * primitive where primitive has coprime integer
/// coefficients and a positive leading coefficient. Zero maps to (0, 0).
std::pair<Rational, ParamPolynomial> split_unit(const ParamPolynomial& p);

/// Normalized greatest common divisor; gcd(0, q) = normalized q, gcd(0, 0) = 0.
ParamPolynomial poly_gcd(const ParamPolynomial& p, const ParamPolynomial& q);

}  // namespace superbi
