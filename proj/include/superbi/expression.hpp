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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superbi/osp_model.hpp"
#include "superbi/params.hpp"
#include "superbi/superweyl.hpp"

namespace superbi {

enum class ExprKind {
  number,
  parameter,
  generator,
  raw,
  add,
  sub,
  negate,
  scalar_mul,
  compose,
  power,
  commutator,
  anticommutator,
};

/// Letters of the named generators A+(S), A-(S), A0(S), P(S), Q(S).
enum class GeneratorName { a_plus, a_minus, a_zero, parity, casimir };

/// Raw Weyl-Clifford letters x_i, t_i, dx_i, dt_i.
enum class RawLetter { x, theta, dx, dtheta };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind = ExprKind::number;
  Rational value;                       // number
  int index = 0;                        // parameter and raw letter index, 1..3
  GeneratorName generator = GeneratorName::a_plus;
  SubsetLabel subset{1};
  RawLetter letter = RawLetter::x;
  unsigned exponent = 0;                // power
  std::vector<Expr> children;
};

namespace expr {

Expr number(const Rational& value);
Expr parameter(int index);
Expr generator(GeneratorName name, const SubsetLabel& subset);
Expr raw(RawLetter letter, int index);
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr negate(Expr a);
/// scalar_mul when either side is parameter-only, compose otherwise.
Expr product(Expr a, Expr b);
Expr power(Expr base, unsigned exponent);
Expr commutator(Expr a, Expr b);
Expr anticommutator(Expr a, Expr b);

/// True if the tree contains no generator or raw letter.
bool is_scalar(const Expr& e);

}  // namespace expr

bool structurally_equal(const Expr& a, const Expr& b);

/// Parses the operator DSL. Throws ParseError with line and column.
Expr parse_expr(const std::string& text);

/// Canonical rendering; parse_expr(render_expr(e)) is structurally equal to e.
std::string render_expr(const Expr& e);

/// Compiles the tree through the osp builders and normal composition.
/// With a point, parameters are bound to rationals before any arithmetic.
OperatorElement eval_expr(const Expr& e, const std::optional<ParamPoint>& point = std::nullopt);
OperatorElement eval_expr(const Expr& e, const Params& params);

}  // namespace superbi
