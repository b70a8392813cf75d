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
#include <string>

#include "superbi/param_polynomial.hpp"
#include "superbi/rational.hpp"

namespace superbi {

/// Element of Q(nu1, nu2, nu3) in canonical form: num and den coprime, den
/// with coprime integer coefficients and positive grlex-leading coefficient.
/// Canonical form makes structural equality coincide with field equality.
class ParamScalar {
 public:
  ParamScalar() : den_(1) {}
  ParamScalar(long value) : num_(value), den_(1) {}                       // NOLINT
  ParamScalar(Rational value) : num_(std::move(value)), den_(1) {}        // NOLINT
  ParamScalar(ParamPolynomial value) : num_(std::move(value)), den_(1) {} // NOLINT

  /// num / den, reduced. Throws DivisionByZero when den is zero.
  static ParamScalar fraction(const ParamPolynomial& num, const ParamPolynomial& den);
  /// nu_{index+1}.
  static ParamScalar nu(int index) { return ParamScalar(ParamPolynomial::variable(index)); }

  const ParamPolynomial& num() const noexcept { return num_; }
  const ParamPolynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant scalar. Precondition: is_constant().
  Rational constant_value() const;
  bool is_one() const;

  ParamScalar operator-() const;
  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  /// Throws DivisionByZero when b is zero.
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
  ParamScalar& operator+=(const ParamScalar& rhs) { return *this = *this + rhs; }
  ParamScalar& operator-=(const ParamScalar& rhs) { return *this = *this - rhs; }
  ParamScalar& operator*=(const ParamScalar& rhs) { return *this = *this * rhs; }
  ParamScalar& operator/=(const ParamScalar& rhs) { return *this = *this / rhs; }
  ParamScalar inverse() const;

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Substitutes (nu1, nu2, nu3) <- point. Throws VanishingDenominator.
  Rational evaluate(const std::array<Rational, 3>& point) const;

  /// "2*nu1 - 1/2" for polynomials, "(num)/(den)" otherwise.
  std::string to_string() const;
  /// Like to_string, but parenthesized unless a single factor.
  std::string to_factor_string() const;

 private:
  // Assumes gcd(num, den) = 1; only normalizes the unit of den.
  static ParamScalar coprime(ParamPolynomial num, const ParamPolynomial& den);

  ParamPolynomial num_;
  ParamPolynomial den_;
};

/// Arithmetic selector for the scalar_arith entry point.
enum class ScalarOp { add, sub, mul, div };
ParamScalar scalar_arith(const ParamScalar& a, const ParamScalar& b, ScalarOp op);
Rational scalar_eval(const ParamScalar& a, const std::array<Rational, 3>& point);

}  // namespace superbi
