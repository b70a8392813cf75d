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

#include "superbi/param_polynomial.hpp"

#include <algorithm>
#include <vector>

#include "superbi/errors.hpp"

namespace superbi {

ParamPolynomial::ParamPolynomial(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(ParamExponents{0, 0, 0}, std::move(constant));
}

ParamPolynomial ParamPolynomial::variable(int index) {
  if (index < 0 || index > 2) throw InvalidArgument("parameter index out of range");
  ParamExponents e{0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(e, Rational(1));
}

ParamPolynomial ParamPolynomial::monomial(const ParamExponents& exponents, Rational coefficient) {
  ParamPolynomial p;
  if (!coefficient.is_zero()) p.terms_.emplace(exponents, std::move(coefficient));
  return p;
}

bool ParamPolynomial::is_constant() const noexcept {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == ParamExponents{0, 0, 0});
}

Rational ParamPolynomial::constant_term() const {
  auto it = terms_.find(ParamExponents{0, 0, 0});
  return it == terms_.end() ? Rational() : it->second;
}

const std::pair<const ParamExponents, Rational>& ParamPolynomial::leading_term() const {
  if (terms_.empty()) throw InvariantViolation("leading term of the zero polynomial");
  return *terms_.rbegin();
}

int ParamPolynomial::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return e[0] + e[1] + e[2];
}

int ParamPolynomial::degree_in(int variable) const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<std::size_t>(variable)]);
  return d;
}

void ParamPolynomial::add_term(const ParamExponents& exponents, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

ParamPolynomial& ParamPolynomial::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
  } else if (!factor.is_one()) {
    for (auto& [e, c] : terms_) c *= factor;
  }
  return *this;
}

void ParamPolynomial::add_product(const ParamPolynomial& a, const ParamPolynomial& b) {
  Rational product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const ParamExponents e{static_cast<std::uint16_t>(ea[0] + eb[0]),
                             static_cast<std::uint16_t>(ea[1] + eb[1]),
                             static_cast<std::uint16_t>(ea[2] + eb[2])};
      product = ca;
      product *= cb;
      add_term(e, product);
    }
  }
}

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
  ParamPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_constant()) return b * a.constant_term();
  if (b.is_constant()) return a * b.constant_term();
  r.add_product(a, b);
  return r;
}

std::optional<ParamPolynomial> ParamPolynomial::divide_exact(const ParamPolynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (divisor.is_constant()) return *this * (Rational(1) / divisor.constant_term());
  ParamPolynomial remainder = *this;
  ParamPolynomial quotient;
  const auto& [dlead, dcoef] = divisor.leading_term();
  while (!remainder.is_zero()) {
    const auto& [rlead, rcoef] = remainder.leading_term();
    ParamExponents q{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (rlead[i] < dlead[i]) return std::nullopt;
      q[i] = static_cast<std::uint16_t>(rlead[i] - dlead[i]);
    }
    const ParamPolynomial step = monomial(q, rcoef / dcoef);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

Rational ParamPolynomial::evaluate(const std::array<Rational, 3>& point) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] != 0) term *= point[i].pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

ParamPolynomial ParamPolynomial::pow(unsigned exponent) const {
  ParamPolynomial result(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

ParamPolynomial ParamPolynomial::substitute(const std::array<ParamPolynomial, 3>& images) const {
  ParamPolynomial result;
  for (const auto& [e, c] : terms_) {
    ParamPolynomial term(c);
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] != 0) term = term * images[i].pow(e[i]);
    }
    result += term;
  }
  return result;
}

std::string ParamPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "nu" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rational mag = c.abs();
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

std::pair<Rational, ParamPolynomial> split_unit(const ParamPolynomial& p) {
  if (p.is_zero()) return {Rational(), ParamPolynomial()};
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  Rational unit(num_gcd, den_lcm);
  if (p.leading_term().second.sign() < 0) unit = -unit;
  if (unit.is_one()) return {unit, p};
  return {unit, p * (Rational(1) / unit)};
}

namespace {

// p viewed as a univariate polynomial in nu_{var+1}; index = degree, coefficients
// free of that variable.
using Univariate = std::vector<ParamPolynomial>;

Univariate split_variable(const ParamPolynomial& p, int var) {
  Univariate u(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1);
  for (const auto& [e, c] : p.terms()) {
    ParamExponents rest = e;
    rest[static_cast<std::size_t>(var)] = 0;
    u[e[static_cast<std::size_t>(var)]].add_term(rest, c);
  }
  return u;
}

ParamPolynomial join_variable(const Univariate& u, int var) {
  ParamPolynomial p;
  for (std::size_t d = 0; d < u.size(); ++d) {
    for (const auto& [e, c] : u[d].terms()) {
      ParamExponents full = e;
      full[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(d);
      p.add_term(full, c);
    }
  }
  return p;
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

ParamPolynomial divide_or_throw(const ParamPolynomial& a, const ParamPolynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InvariantViolation("inexact division inside polynomial gcd");
  return *std::move(q);
}

ParamPolynomial gcd_recursive(const ParamPolynomial& a, const ParamPolynomial& b, int var);

ParamPolynomial content_of(const Univariate& u, int var) {
  ParamPolynomial g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? split_unit(c).second : gcd_recursive(g, c, var + 1);
    if (g.is_constant()) return ParamPolynomial(1);
  }
  return g;
}

// Primitive part with respect to nu_{var+1}, also stripped of its rational unit.
Univariate primitive_part(const Univariate& u, int var) {
  const ParamPolynomial content = content_of(u, var);
  Univariate result;
  result.reserve(u.size());
  for (const auto& c : u) result.push_back(divide_or_throw(c, content));
  return split_variable(split_unit(join_variable(result, var)).second, var);
}

// Sparse pseudo-remainder of a by b (deg a >= deg b >= 1).
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const ParamPolynomial& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const ParamPolynomial la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

ParamPolynomial gcd_recursive(const ParamPolynomial& a, const ParamPolynomial& b, int var) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant() || var > 2) return ParamPolynomial(1);
  if (a.degree_in(var) == 0 && b.degree_in(var) == 0) return gcd_recursive(a, b, var + 1);

  Univariate ua = split_variable(a, var);
  Univariate ub = split_variable(b, var);
  const ParamPolynomial content =
      gcd_recursive(content_of(ua, var), content_of(ub, var), var + 1);
  ua = primitive_part(ua, var);
  ub = primitive_part(ub, var);
  if (ua.size() < ub.size()) std::swap(ua, ub);

  Univariate g;
  while (true) {
    if (ub.size() == 1) {  // nonzero constant in this variable: primitive, so a unit
      g = Univariate{ParamPolynomial(1)};
      break;
    }
    Univariate r = pseudo_remainder(ua, ub);
    if (r.empty()) {
      g = ub;
      break;
    }
    ua = std::move(ub);
    ub = primitive_part(r, var);
  }
  return content * join_variable(g, var);
}

}  // namespace

ParamPolynomial poly_gcd(const ParamPolynomial& p, const ParamPolynomial& q) {
  if (p.is_zero() && q.is_zero()) return ParamPolynomial();
  if (p.is_zero()) return split_unit(q).second;
  if (q.is_zero()) return split_unit(p).second;
  if (p.is_constant() || q.is_constant()) return ParamPolynomial(1);
  return split_unit(gcd_recursive(p, q, 0)).second;
}

}  // namespace superbi
