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

#include "superbi/osp_model.hpp"

#include "superbi/errors.hpp"

namespace superbi {

CopyIndex::CopyIndex(int j) : j_(j) {
  if (j < 1 || j > 3) throw InvalidArgument("copy index must be 1, 2 or 3");
}

SubsetLabel::SubsetLabel(unsigned mask) : mask_(mask) {
  if (mask == 0 || mask > 7) throw InvalidArgument("subset must be a nonempty subset of {1,2,3}");
}

SubsetLabel SubsetLabel::parse(const std::string& digits) {
  unsigned mask = 0;
  for (char c : digits) {
    if (c < '1' || c > '3') {
      throw InvalidArgument("subset digit '" + std::string(1, c) + "' is outside 1..3");
    }
    const unsigned bit = 1u << (c - '1');
    if (mask & bit) throw InvalidArgument("subset digit '" + std::string(1, c) + "' repeated");
    mask |= bit;
  }
  if (mask == 0) throw InvalidArgument("empty subset");
  return SubsetLabel(mask);
}

std::vector<int> SubsetLabel::members() const {
  std::vector<int> m;
  for (int j = 1; j <= 3; ++j) {
    if (contains(j)) m.push_back(j);
  }
  return m;
}

std::string SubsetLabel::to_string() const {
  std::string s;
  for (int j : members()) s += static_cast<char>('0' + j);
  return s;
}

std::vector<SubsetLabel> SubsetLabel::all() {
  // Singletons, pairs, then the full set.
  return {SubsetLabel(1), SubsetLabel(2), SubsetLabel(4), SubsetLabel(3),
          SubsetLabel(5), SubsetLabel(6), SubsetLabel(7)};
}

OperatorElement build_generator(GeneratorKind kind, CopyIndex copy, const Params& params) {
  const int j = copy.value();
  const auto x = OperatorElement::x(j);
  const auto t = OperatorElement::theta(j);
  const auto dx = OperatorElement::dx(j);
  const auto dt = OperatorElement::dtheta(j);
  const ParamScalar two_nu = ParamScalar(2) * params.nu(j);
  switch (kind) {
    case GeneratorKind::a_minus:
      return t * dx + dt;
    case GeneratorKind::a_zero:
      return ParamScalar(2) * (x * dx) + t * dt + OperatorElement::scalar(two_nu);
    case GeneratorKind::a_plus:
      return x * t * dx + x * dt + two_nu * t;
    case GeneratorKind::parity:
      return OperatorElement::identity() - ParamScalar(2) * (t * dt);
  }
  throw InvalidArgument("unknown generator kind");
}

OperatorElement build_aggregate(GeneratorKind kind, const SubsetLabel& s, const Params& params) {
  return OspRealization::standard(params).aggregate(kind, s);
}

OperatorElement casimir(const SubsetLabel& s, const Params& params) {
  return OspRealization::standard(params).casimir(s);
}

OspRealization OspRealization::standard(const Params& params) {
  OspRealization r;
  r.params = params;
  for (int j = 1; j <= 3; ++j) {
    const auto i = static_cast<std::size_t>(j - 1);
    r.a_minus[i] = build_generator(GeneratorKind::a_minus, CopyIndex(j), params);
    r.a_zero[i] = build_generator(GeneratorKind::a_zero, CopyIndex(j), params);
    r.a_plus[i] = build_generator(GeneratorKind::a_plus, CopyIndex(j), params);
    r.parity[i] = build_generator(GeneratorKind::parity, CopyIndex(j), params);
  }
  return r;
}

const OperatorElement& OspRealization::generator(GeneratorKind kind, int j) const {
  const auto i = static_cast<std::size_t>(CopyIndex(j).value() - 1);
  switch (kind) {
    case GeneratorKind::a_minus: return a_minus[i];
    case GeneratorKind::a_zero: return a_zero[i];
    case GeneratorKind::a_plus: return a_plus[i];
    case GeneratorKind::parity: return parity[i];
  }
  throw InvalidArgument("unknown generator kind");
}

OperatorElement OspRealization::aggregate(GeneratorKind kind, const SubsetLabel& s) const {
  OperatorElement result = kind == GeneratorKind::parity ? OperatorElement::identity()
                                                         : OperatorElement();
  for (int j : s.members()) {
    if (kind == GeneratorKind::parity) {
      result = result * generator(kind, j);
    } else {
      result += generator(kind, j);
    }
  }
  return result;
}

OperatorElement OspRealization::casimir(const SubsetLabel& s) const {
  const OperatorElement inner = aggregate(GeneratorKind::a_zero, s) -
                                ParamScalar(2) * (aggregate(GeneratorKind::a_plus, s) *
                                                  aggregate(GeneratorKind::a_minus, s)) -
                                OperatorElement::scalar(Rational(1, 2));
  return inner * aggregate(GeneratorKind::parity, s);
}

std::pair<std::size_t, std::string> operator_residual(const OperatorElement& residual) {
  if (residual.is_zero()) return {0, {}};
  return {residual.term_count(), residual.to_string()};
}

namespace {

OperatorElement comm(const OperatorElement& a, const OperatorElement& b) {
  return bracket(a, b, BracketKind::commutator);
}

OperatorElement anti(const OperatorElement& a, const OperatorElement& b) {
  return bracket(a, b, BracketKind::anticommutator);
}

// Sum of residual term counts of several operators that should all vanish.
std::pair<std::size_t, std::string> all_zero(std::initializer_list<OperatorElement> residuals) {
  std::size_t terms = 0;
  std::string rendering;
  for (const auto& r : residuals) {
    if (r.is_zero()) continue;
    terms += r.term_count();
    if (!rendering.empty()) rendering += " ; ";
    rendering += r.to_string();
  }
  return {terms, rendering};
}

}  // namespace

VerificationReport check_fundamental_relations(const OspRealization& g) {
  VerificationReport report("osp", g.params.describe());
  const auto id = OperatorElement::identity();
  for (int j = 1; j <= 3; ++j) {
    const auto i = static_cast<std::size_t>(j - 1);
    const auto& am = g.a_minus[i];
    const auto& a0 = g.a_zero[i];
    const auto& ap = g.a_plus[i];
    const auto& p = g.parity[i];
    const std::string c = "copy" + std::to_string(j) + ".";
    const std::string sj = std::to_string(j);
    report.run(c + "comm_A0_Apm", "[A0,A+] = A+ and [A0,A-] = -A-",
               [&] { return all_zero({comm(a0, ap) - ap, comm(a0, am) + am}); });
    report.run(c + "anticomm_Ap_Am", "{A+,A-} = A0",
               [&] { return operator_residual(anti(ap, am) - a0); });
    report.run(c + "Am_squared", "A-^2 = dx",
               [&] { return operator_residual(am * am - OperatorElement::dx(j)); });
    report.run(c + "P_involution", "P^2 = 1", [&] { return operator_residual(p * p - id); });
    report.run(c + "P_A0", "[P,A0] = 0", [&] { return operator_residual(comm(p, a0)); });
    report.run(c + "P_Apm", "{P,A+} = {P,A-} = 0",
               [&] { return all_zero({anti(p, ap), anti(p, am)}); });
    const SubsetLabel single(1u << (j - 1));
    const OperatorElement q = g.casimir(single);
    report.run(c + "Q_central", "Q commutes with A0, A+, A-, P", [&] {
      return all_zero({comm(q, a0), comm(q, ap), comm(q, am), comm(q, p)});
    });
    report.run(c + "Q_scalar", "Q" + sj + " = 2 nu" + sj + " - 1/2", [&] {
      const ParamScalar expected = ParamScalar(2) * g.params.nu(j) - ParamScalar(Rational(1, 2));
      return operator_residual(q - OperatorElement::scalar(expected));
    });
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      const auto ii = static_cast<std::size_t>(i - 1);
      const auto jj = static_cast<std::size_t>(j - 1);
      const std::string c = "pair" + std::to_string(i) + std::to_string(j) + ".";
      report.run(c + "comm_A0_A0", "[A0(i),A0(j)] = 0",
                 [&] { return operator_residual(comm(g.a_zero[ii], g.a_zero[jj])); });
      report.run(c + "comm_A0_Apm", "[A0(i),A+-(j)] = 0, both orders", [&] {
        return all_zero({comm(g.a_zero[ii], g.a_plus[jj]), comm(g.a_zero[ii], g.a_minus[jj]),
                         comm(g.a_zero[jj], g.a_plus[ii]), comm(g.a_zero[jj], g.a_minus[ii])});
      });
      report.run(c + "anticomm_same_sign", "{A+(i),A+(j)} = {A-(i),A-(j)} = 0", [&] {
        return all_zero({anti(g.a_plus[ii], g.a_plus[jj]), anti(g.a_minus[ii], g.a_minus[jj])});
      });
      report.run(c + "anticomm_opposite_sign", "{A+(i),A-(j)} = {A-(i),A+(j)} = 0", [&] {
        return all_zero({anti(g.a_plus[ii], g.a_minus[jj]), anti(g.a_minus[ii], g.a_plus[jj])});
      });
    }
  }
  return report;
}

VerificationReport check_fundamental_relations(const Params& params) {
  return check_fundamental_relations(OspRealization::standard(params));
}

VerificationReport check_centrality(const Params& params) {
  const OspRealization g = OspRealization::standard(params);
  VerificationReport report("osp", params.describe());
  std::vector<OperatorElement> casimirs;
  for (const auto& s : SubsetLabel::all()) casimirs.push_back(g.casimir(s));
  const auto subsets = SubsetLabel::all();
  for (std::size_t t = 0; t < subsets.size(); ++t) {
    const auto& T = subsets[t];
    const OperatorElement a0 = g.aggregate(GeneratorKind::a_zero, T);
    const OperatorElement ap = g.aggregate(GeneratorKind::a_plus, T);
    const OperatorElement am = g.aggregate(GeneratorKind::a_minus, T);
    const OperatorElement p = g.aggregate(GeneratorKind::parity, T);
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      const auto& S = subsets[s];
      if (!S.is_subset_of(T)) continue;
      const auto& q = casimirs[s];
      report.run("centrality.Q" + S.to_string() + ".T" + T.to_string(),
                 "Q(S) commutes with A0, A+, A-, P of T", [&] {
                   return all_zero({comm(q, a0), comm(q, ap), comm(q, am), comm(q, p)});
                 });
    }
  }
  return report;
}

VerificationReport check_bannai_ito(const Params& params) {
  const OspRealization g = OspRealization::standard(params);
  VerificationReport report("bannai-ito", params.describe());
  const auto q = [&](const char* digits) { return g.casimir(SubsetLabel::parse(digits)); };
  const OperatorElement q1 = q("1"), q2 = q("2"), q3 = q("3");
  const OperatorElement q12 = q("12"), q13 = q("13"), q23 = q("23"), q123 = q("123");
  const ParamScalar two(2);
  report.run("anticomm_Q12_Q23", "{Q12,Q23} = Q13 + 2 Q1 Q3 + 2 Q2 Q123", [&] {
    return operator_residual(anti(q12, q23) - q13 - two * (q1 * q3) - two * (q2 * q123));
  });
  report.run("anticomm_Q12_Q13", "{Q12,Q13} = Q23 + 2 Q2 Q3 + 2 Q1 Q123", [&] {
    return operator_residual(anti(q12, q13) - q23 - two * (q2 * q3) - two * (q1 * q123));
  });
  report.run("anticomm_Q13_Q23", "{Q13,Q23} = Q12 + 2 Q1 Q2 + 2 Q3 Q123", [&] {
    return operator_residual(anti(q13, q23) - q12 - two * (q1 * q2) - two * (q3 * q123));
  });
  report.run("sum_of_squares",
             "Q12^2 + Q13^2 + Q23^2 + 1/4 = Q123^2 + Q1^2 + Q2^2 + Q3^2", [&] {
               const OperatorElement lhs = q12 * q12 + q13 * q13 + q23 * q23 +
                                           OperatorElement::scalar(Rational(1, 4));
               const OperatorElement rhs = q123 * q123 + q1 * q1 + q2 * q2 + q3 * q3;
               return operator_residual(lhs - rhs);
             });
  return report;
}

}  // namespace superbi
