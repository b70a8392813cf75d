#pragma once

#include <string>

#include "superbi/param_scalar.hpp"

namespace superbi::detail {

// Appends "c*monomial" to a sum, folding signs of constant coefficients into
// the separator. An empty monomial stands for 1.
inline void append_term(std::string& out, const ParamScalar& c, const std::string& monomial) {
  const bool first = out.empty();
  std::string coefficient;
  bool negative = false;
  if (c.is_constant()) {
    const Rational value = c.constant_value();
    negative = value.sign() < 0;
    const Rational mag = value.abs();
    if (!mag.is_one() || monomial.empty()) coefficient = mag.to_string();
  } else {
    coefficient = "(" + c.to_string() + ")";
  }
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  out += coefficient;
  if (!coefficient.empty() && !monomial.empty()) out += "*";
  out += monomial;
}

inline void append_factor(std::string& out, const std::string& name, int power) {
  if (power == 0) return;
  if (!out.empty()) out += "*";
  out += name;
  if (power > 1) out += "^" + std::to_string(power);
}

}  // namespace superbi::detail
