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

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "superbi/param_scalar.hpp"
#include "superbi/superspace.hpp"

namespace superbi {

/// x^x * theta_theta * dx^dx * dtheta_dtheta, Grassmann factors ascending.
struct NormalWord {
  XExponents x{0, 0, 0};
  ThetaMask theta = 0;
  XExponents dx{0, 0, 0};
  ThetaMask dtheta = 0;

  int parity() const noexcept {
    return (grassmann::popcount(theta) + grassmann::popcount(dtheta)) & 1;
  }
  friend auto operator<=>(const NormalWord&, const NormalWord&) = default;
};

/// Normal-ordered element of the polynomial Weyl-Clifford algebra in
/// x1..x3, theta1..theta3. Words are reduced on construction, so the zero
/// operator is exactly the empty map.
class OperatorElement {
 public:
  using Terms = std::map<NormalWord, ParamScalar>;

  OperatorElement() = default;
  static OperatorElement identity() { return scalar(ParamScalar(1)); }
  static OperatorElement scalar(const ParamScalar& c);
  static OperatorElement word(const NormalWord& w, const ParamScalar& c = ParamScalar(1));
  static OperatorElement x(int i);
  static OperatorElement theta(int i);
  static OperatorElement dx(int i);
  static OperatorElement dtheta(int i);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Common parity of all words; nullopt when mixed. Zero counts as even.
  std::optional<int> parity() const;

  void add_term(const NormalWord& w, const ParamScalar& c);
  OperatorElement operator-() const;
  OperatorElement& operator+=(const OperatorElement& rhs);
  OperatorElement& operator-=(const OperatorElement& rhs);
  friend OperatorElement operator+(OperatorElement a, const OperatorElement& b) { return a += b; }
  friend OperatorElement operator-(OperatorElement a, const OperatorElement& b) { return a -= b; }
  friend OperatorElement operator*(const ParamScalar& c, const OperatorElement& a);
  /// Composition a o b in normal form.
  friend OperatorElement operator*(const OperatorElement& a, const OperatorElement& b);
  friend bool operator==(const OperatorElement& a, const OperatorElement& b) {
    return a.terms_ == b.terms_;
  }

  OperatorElement pow(unsigned exponent) const;
  OperatorElement map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const;

  /// "x1*t2*dx1 + (2*nu1)*t1"; "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

SuperElement apply(const OperatorElement& op, const SuperElement& f);
OperatorElement normal_compose(const OperatorElement& a, const OperatorElement& b);

enum class BracketKind { commutator, anticommutator, super };
/// commutator ab - ba, anticommutator ab + ba, super ab - (-1)^{|a||b|} ba.
/// The super bracket throws InvalidArgument on a mixed-parity operand.
OperatorElement bracket(const OperatorElement& a, const OperatorElement& b, BracketKind kind);

inline bool is_zero_operator(const OperatorElement& a) noexcept { return a.is_zero(); }

}  // namespace superbi
