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
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "superbi/param_scalar.hpp"

namespace superbi {

using XExponents = std::array<std::uint16_t, 3>;
/// Bit i-1 set means theta_i is present; factors are always in ascending order.
using ThetaMask = std::uint8_t;

namespace grassmann {

/// A Grassmann monomial with a sign; sign == 0 encodes the zero product.
struct Signed {
  ThetaMask mask = 0;
  int sign = 0;
};

inline int popcount(ThetaMask m) noexcept { return __builtin_popcount(m); }

/// theta_a * theta_b reordered to ascending order.
Signed wedge(ThetaMask a, ThetaMask b) noexcept;
/// Left derivative d/dtheta_i (i in 1..3) of theta_m.
Signed left_derivative(int i, ThetaMask m) noexcept;
/// Canonical mask and sign for a product of theta factors in the given order.
Signed ordered_product(std::initializer_list<int> indices) noexcept;

}  // namespace grassmann

struct SuperMonomial {
  XExponents x{0, 0, 0};
  ThetaMask theta = 0;

  int x_degree() const noexcept { return x[0] + x[1] + x[2]; }
  friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;
};

/// Element of C[x1,x2,x3]<theta1,theta2,theta3> with ParamScalar coefficients.
class SuperElement {
 public:
  using Terms = std::map<SuperMonomial, ParamScalar>;

  SuperElement() = default;
  static SuperElement constant(const ParamScalar& c);
  static SuperElement x(int i);
  static SuperElement theta(int i);
  /// c * x^exponents * theta_{i1} theta_{i2} ... in the given (arbitrary) order;
  /// the reordering sign is absorbed into the coefficient.
  static SuperElement monomial(const ParamScalar& c, const XExponents& exponents,
                               std::initializer_list<int> thetas = {});

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of the given monomial (zero when absent).
  ParamScalar coefficient(const SuperMonomial& m) const;
  /// 0 even, 1 odd, nullopt when mixed; zero counts as even.
  std::optional<int> parity() const;

  void add_term(const SuperMonomial& m, const ParamScalar& c);
  SuperElement operator-() const;
  SuperElement& operator+=(const SuperElement& rhs);
  SuperElement& operator-=(const SuperElement& rhs);
  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
  friend SuperElement operator*(const ParamScalar& c, const SuperElement& f);
  friend SuperElement operator*(const SuperElement& f, const SuperElement& g);
  friend bool operator==(const SuperElement& a, const SuperElement& b) {
    return a.terms_ == b.terms_;
  }

  SuperElement map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const;

  /// "(2*nu1 - 1/2)*x1^2*t1*t3 + t2"; "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

SuperElement super_mul(const SuperElement& f, const SuperElement& g);

struct GradedParts {
  SuperElement even;
  SuperElement odd;
};
GradedParts grade_split(const SuperElement& f);

SuperElement x_homogeneous_component(const SuperElement& f, int degree);

/// Polynomial sum c_ij u^i v^j with ParamScalar coefficients.
class UVPolynomial {
 public:
  using Exponents = std::pair<std::uint16_t, std::uint16_t>;
  using Terms = std::map<Exponents, ParamScalar>;

  UVPolynomial() = default;
  static UVPolynomial constant(const ParamScalar& c);
  static UVPolynomial monomial(const ParamScalar& c, int u_power, int v_power);
  static UVPolynomial u() { return monomial(ParamScalar(1), 1, 0); }
  static UVPolynomial v() { return monomial(ParamScalar(1), 0, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ParamScalar coefficient(int u_power, int v_power) const;
  int total_degree() const noexcept;
  /// Degree when every term has the same total degree; nullopt otherwise or for zero.
  std::optional<int> homogeneous_degree() const;

  void add_term(const Exponents& e, const ParamScalar& c);
  UVPolynomial operator-() const;
  UVPolynomial& operator+=(const UVPolynomial& rhs);
  UVPolynomial& operator-=(const UVPolynomial& rhs);
  friend UVPolynomial operator+(UVPolynomial a, const UVPolynomial& b) { return a += b; }
  friend UVPolynomial operator-(UVPolynomial a, const UVPolynomial& b) { return a -= b; }
  friend UVPolynomial operator*(const ParamScalar& c, const UVPolynomial& h);
  friend UVPolynomial operator*(const UVPolynomial& a, const UVPolynomial& b);
  friend bool operator==(const UVPolynomial& a, const UVPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  UVPolynomial d_u() const;
  UVPolynomial d_v() const;
  /// Multiplies by u^a v^b.
  UVPolynomial shift(int a, int b) const;
  UVPolynomial map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Substitutes u <- x1 - x2, v <- x2 - x3.
SuperElement uv_lift(const UVPolynomial& h);

}  // namespace superbi
