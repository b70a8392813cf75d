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

#include "superbi/expression.hpp"

#include <cctype>
#include <string_view>

#include "superbi/errors.hpp"

namespace superbi {
namespace expr {
namespace {

Expr make(ExprNode node) { return std::make_shared<const ExprNode>(std::move(node)); }

Expr binary(ExprKind kind, Expr a, Expr b) {
  ExprNode n;
  n.kind = kind;
  n.children = {std::move(a), std::move(b)};
  return make(std::move(n));
}

void check_index(int index) {
  if (index < 1 || index > 3) throw InvalidArgument("index must be 1, 2 or 3");
}

}  // namespace

Expr number(const Rational& value) {
  if (value.sign() < 0) throw InvalidArgument("number literals are nonnegative; use negate");
  ExprNode n;
  n.kind = ExprKind::number;
  n.value = value;
  return make(std::move(n));
}

Expr parameter(int index) {
  check_index(index);
  ExprNode n;
  n.kind = ExprKind::parameter;
  n.index = index;
  return make(std::move(n));
}

Expr generator(GeneratorName name, const SubsetLabel& subset) {
  ExprNode n;
  n.kind = ExprKind::generator;
  n.generator = name;
  n.subset = subset;
  return make(std::move(n));
}

Expr raw(RawLetter letter, int index) {
  check_index(index);
  ExprNode n;
  n.kind = ExprKind::raw;
  n.letter = letter;
  n.index = index;
  return make(std::move(n));
}

Expr add(Expr a, Expr b) { return binary(ExprKind::add, std::move(a), std::move(b)); }
Expr sub(Expr a, Expr b) { return binary(ExprKind::sub, std::move(a), std::move(b)); }

Expr negate(Expr a) {
  ExprNode n;
  n.kind = ExprKind::negate;
  n.children = {std::move(a)};
  return make(std::move(n));
}

Expr product(Expr a, Expr b) {
  const ExprKind kind = is_scalar(a) || is_scalar(b) ? ExprKind::scalar_mul : ExprKind::compose;
  return binary(kind, std::move(a), std::move(b));
}

Expr power(Expr base, unsigned exponent) {
  ExprNode n;
  n.kind = ExprKind::power;
  n.exponent = exponent;
  n.children = {std::move(base)};
  return make(std::move(n));
}

Expr commutator(Expr a, Expr b) {
  return binary(ExprKind::commutator, std::move(a), std::move(b));
}

Expr anticommutator(Expr a, Expr b) {
  return binary(ExprKind::anticommutator, std::move(a), std::move(b));
}

bool is_scalar(const Expr& e) {
  switch (e->kind) {
    case ExprKind::number:
    case ExprKind::parameter: return true;
    case ExprKind::generator:
    case ExprKind::raw: return false;
    case ExprKind::commutator:
    case ExprKind::anticommutator: return false;
    default:
      for (const Expr& c : e->children) {
        if (!is_scalar(c)) return false;
      }
      return true;
  }
}

}  // namespace expr

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a->kind != b->kind || a->children.size() != b->children.size()) return false;
  switch (a->kind) {
    case ExprKind::number:
      if (a->value != b->value) return false;
      break;
    case ExprKind::parameter:
      if (a->index != b->index) return false;
      break;
    case ExprKind::generator:
      if (a->generator != b->generator || !(a->subset == b->subset)) return false;
      break;
    case ExprKind::raw:
      if (a->letter != b->letter || a->index != b->index) return false;
      break;
    case ExprKind::power:
      if (a->exponent != b->exponent) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, line_, at - line_start_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' at end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  bool starts_with(std::string_view word) const {
    return text_.substr(pos_, word.size()) == word;
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_++];
    }
    return out;
  }

  Expr expression() {
    skip_space();
    Expr e = accept('-') ? expr::negate(term()) : term();
    for (;;) {
      if (accept('+')) {
        e = expr::add(std::move(e), term());
      } else if (accept('-')) {
        e = expr::sub(std::move(e), term());
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = factor();
    while (accept('*')) e = expr::product(std::move(e), factor());
    return e;
  }

  Expr factor() {
    Expr e = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const std::string n = digits();
      if (n.empty()) fail("expected a nonnegative integer exponent");
      if (n.size() > 4) fail_at("exponent too large", at);
      e = expr::power(std::move(e), static_cast<unsigned>(std::stoul(n)));
    }
    return e;
  }

  int letter_index(std::size_t at) {
    const std::string d = digits();
    if (d.size() != 1 || d[0] < '1' || d[0] > '3') fail_at("index must be 1, 2 or 3", at);
    return d[0] - '0';
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      expect(')');
      return e;
    }
    if (c == '[' || c == '{') {
      ++pos_;
      Expr a = expression();
      expect(',');
      Expr b = expression();
      expect(c == '[' ? ']' : '}');
      return c == '[' ? expr::commutator(std::move(a), std::move(b))
                      : expr::anticommutator(std::move(a), std::move(b));
    }
    if (starts_with("nu")) {
      pos_ += 2;
      return expr::parameter(letter_index(at));
    }
    if (starts_with("dx") || starts_with("dt")) {
      const RawLetter letter = text_[pos_ + 1] == 'x' ? RawLetter::dx : RawLetter::dtheta;
      pos_ += 2;
      return expr::raw(letter, letter_index(at));
    }
    if (c == 'x' || c == 't') {
      ++pos_;
      return expr::raw(c == 'x' ? RawLetter::x : RawLetter::theta, letter_index(at));
    }
    GeneratorName name;
    if (starts_with("A+")) {
      name = GeneratorName::a_plus;
      pos_ += 2;
    } else if (starts_with("A-")) {
      name = GeneratorName::a_minus;
      pos_ += 2;
    } else if (starts_with("A0")) {
      name = GeneratorName::a_zero;
      pos_ += 2;
    } else if (c == 'P') {
      name = GeneratorName::parity;
      ++pos_;
    } else if (c == 'Q') {
      name = GeneratorName::casimir;
      ++pos_;
    } else {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == pos_) fail("unexpected '" + std::string(1, c) + "'");
      fail("unknown name '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '(' after generator name");
    ++pos_;
    skip_space();
    const std::size_t subset_at = pos_;
    const std::string s = digits();
    SubsetLabel subset{1};
    try {
      subset = SubsetLabel::parse(s);
    } catch (const Error& e) {
      fail_at(e.what(), subset_at);
    }
    expect(')');
    return expr::generator(name, subset);
  }

  Expr number() {
    std::string text = digits();
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      const std::size_t at = pos_;
      ++pos_;
      const std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos) fail_at("zero denominator", at);
      text += "/" + den;
    }
    return expr::number(Rational::parse(text));
  }
};

int precedence(const Expr& e) {
  switch (e->kind) {
    case ExprKind::add:
    case ExprKind::sub:
    case ExprKind::negate: return 1;
    case ExprKind::scalar_mul:
    case ExprKind::compose: return 2;
    case ExprKind::power: return 3;
    default: return 4;
  }
}

void render(const Expr& e, std::string& out);

void render_at(const Expr& e, int min_precedence, std::string& out) {
  if (precedence(e) < min_precedence) {
    out += '(';
    render(e, out);
    out += ')';
  } else {
    render(e, out);
  }
}

const char* generator_prefix(GeneratorName name) {
  switch (name) {
    case GeneratorName::a_plus: return "A+";
    case GeneratorName::a_minus: return "A-";
    case GeneratorName::a_zero: return "A0";
    case GeneratorName::parity: return "P";
    case GeneratorName::casimir: return "Q";
  }
  return "";
}

const char* raw_prefix(RawLetter letter) {
  switch (letter) {
    case RawLetter::x: return "x";
    case RawLetter::theta: return "t";
    case RawLetter::dx: return "dx";
    case RawLetter::dtheta: return "dt";
  }
  return "";
}

void render(const Expr& e, std::string& out) {
  const auto& c = e->children;
  switch (e->kind) {
    case ExprKind::number: out += e->value.to_string(); break;
    case ExprKind::parameter: out += "nu" + std::to_string(e->index); break;
    case ExprKind::generator:
      out += generator_prefix(e->generator);
      out += "(" + e->subset.to_string() + ")";
      break;
    case ExprKind::raw: out += raw_prefix(e->letter) + std::to_string(e->index); break;
    case ExprKind::add:
    case ExprKind::sub:
      render_at(c[0], 1, out);
      out += e->kind == ExprKind::add ? " + " : " - ";
      render_at(c[1], 2, out);
      break;
    case ExprKind::negate:
      out += '-';
      render_at(c[0], 2, out);
      break;
    case ExprKind::scalar_mul:
    case ExprKind::compose:
      render_at(c[0], 2, out);
      out += '*';
      render_at(c[1], 3, out);
      break;
    case ExprKind::power:
      render_at(c[0], 4, out);
      out += "^" + std::to_string(e->exponent);
      break;
    case ExprKind::commutator:
    case ExprKind::anticommutator: {
      const bool comm = e->kind == ExprKind::commutator;
      out += comm ? '[' : '{';
      render(c[0], out);
      out += ", ";
      render(c[1], out);
      out += comm ? ']' : '}';
      break;
    }
  }
}

class Evaluator {
 public:
  explicit Evaluator(const Params& params) : params_(params), model_(OspRealization::standard(params)) {}

  OperatorElement eval(const Expr& e) const {
    const auto& c = e->children;
    switch (e->kind) {
      case ExprKind::number: return OperatorElement::scalar(ParamScalar(e->value));
      case ExprKind::parameter: return OperatorElement::scalar(params_.nu(e->index));
      case ExprKind::generator: return named(e->generator, e->subset);
      case ExprKind::raw:
        switch (e->letter) {
          case RawLetter::x: return OperatorElement::x(e->index);
          case RawLetter::theta: return OperatorElement::theta(e->index);
          case RawLetter::dx: return OperatorElement::dx(e->index);
          case RawLetter::dtheta: return OperatorElement::dtheta(e->index);
        }
        break;
      case ExprKind::add: return eval(c[0]) + eval(c[1]);
      case ExprKind::sub: return eval(c[0]) - eval(c[1]);
      case ExprKind::negate: return -eval(c[0]);
      case ExprKind::scalar_mul:
      case ExprKind::compose: return eval(c[0]) * eval(c[1]);
      case ExprKind::power: return eval(c[0]).pow(e->exponent);
      case ExprKind::commutator:
        return bracket(eval(c[0]), eval(c[1]), BracketKind::commutator);
      case ExprKind::anticommutator:
        return bracket(eval(c[0]), eval(c[1]), BracketKind::anticommutator);
    }
    throw InvariantViolation("unhandled expression node");
  }

 private:
  const Params& params_;
  OspRealization model_;

  OperatorElement named(GeneratorName name, const SubsetLabel& s) const {
    switch (name) {
      case GeneratorName::a_plus: return model_.aggregate(GeneratorKind::a_plus, s);
      case GeneratorName::a_minus: return model_.aggregate(GeneratorKind::a_minus, s);
      case GeneratorName::a_zero: return model_.aggregate(GeneratorKind::a_zero, s);
      case GeneratorName::parity: return model_.aggregate(GeneratorKind::parity, s);
      case GeneratorName::casimir: return model_.casimir(s);
    }
    throw InvariantViolation("unhandled generator");
  }
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string render_expr(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

OperatorElement eval_expr(const Expr& e, const Params& params) { return Evaluator(params).eval(e); }

OperatorElement eval_expr(const Expr& e, const std::optional<ParamPoint>& point) {
  return eval_expr(e, point ? Params::at(*point) : Params::symbolic());
}

}  // namespace superbi
