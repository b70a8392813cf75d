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

#include "superbi/param_scalar.hpp"

#include "superbi/errors.hpp"

namespace superbi {

namespace {

ParamPolynomial exact_quotient(const ParamPolynomial& a, const ParamPolynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InvariantViolation("gcd does not divide its argument");
  return *std::move(q);
}

}  // namespace

ParamScalar ParamScalar::coprime(ParamPolynomial num, const ParamPolynomial& den) {
  ParamScalar r;
  if (num.is_zero()) return r;
  auto [unit, primitive] = split_unit(den);
  if (!unit.is_one()) num *= Rational(1) / unit;
  r.num_ = std::move(num);
  r.den_ = std::move(primitive);
  return r;
}

ParamScalar ParamScalar::fraction(const ParamPolynomial& num, const ParamPolynomial& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return ParamScalar();
  if (den.is_constant()) return ParamScalar(num * (Rational(1) / den.constant_term()));
  const ParamPolynomial g = poly_gcd(num, den);
  if (g.is_constant()) return coprime(num, den);
  return coprime(exact_quotient(num, g), exact_quotient(den, g));
}

Rational ParamScalar::constant_value() const {
  if (!is_constant()) throw InvalidArgument("scalar " + to_string() + " is not constant");
  return num_.constant_term();
}

bool ParamScalar::is_one() const { return den_.is_constant() && num_ == ParamPolynomial(1); }

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return ParamScalar(a.num_ + b.num_);
  if (a.den_ == b.den_) return ParamScalar::fraction(a.num_ + b.num_, a.den_);
  const ParamPolynomial g = poly_gcd(a.den_, b.den_);
  const ParamPolynomial ad = exact_quotient(a.den_, g);
  const ParamPolynomial bd = exact_quotient(b.den_, g);
  return ParamScalar::fraction(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero() || b.is_zero()) return ParamScalar();
  if (a.is_polynomial() && b.is_polynomial()) return ParamScalar(a.num_ * b.num_);
  const ParamPolynomial g1 = poly_gcd(a.num_, b.den_);
  const ParamPolynomial g2 = poly_gcd(b.num_, a.den_);
  ParamPolynomial an = g1.is_constant() ? a.num_ : exact_quotient(a.num_, g1);
  ParamPolynomial bd = g1.is_constant() ? b.den_ : exact_quotient(b.den_, g1);
  ParamPolynomial bn = g2.is_constant() ? b.num_ : exact_quotient(b.num_, g2);
  ParamPolynomial ad = g2.is_constant() ? a.den_ : exact_quotient(a.den_, g2);
  return ParamScalar::coprime(an * bn, ad * bd);
}

ParamScalar ParamScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.is_constant()) return ParamScalar(den_ * (Rational(1) / num_.constant_term()));
  return coprime(den_, num_);
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) { return a * b.inverse(); }

Rational ParamScalar::evaluate(const std::array<Rational, 3>& point) const {
  const Rational d = den_.evaluate(point);
  if (d.is_zero()) throw VanishingDenominator(den_.to_string());
  return num_.evaluate(point) / d;
}

std::string ParamScalar::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string ParamScalar::to_factor_string() const {
  if (is_polynomial() && num_.term_count() == 1) {
    const auto& [e, c] = *num_.terms().begin();
    if (e == ParamExponents{0, 0, 0} || c.is_one()) return num_.to_string();
  }
  return "(" + to_string() + ")";
}

ParamScalar scalar_arith(const ParamScalar& a, const ParamScalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::sub: return a - b;
    case ScalarOp::mul: return a * b;
    case ScalarOp::div: return a / b;
  }
  throw InvalidArgument("unknown scalar operation");
}

Rational scalar_eval(const ParamScalar& a, const std::array<Rational, 3>& point) {
  return a.evaluate(point);
}

}  // namespace superbi
