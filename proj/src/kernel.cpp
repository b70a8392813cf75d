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

#include "superbi/kernel.hpp"

#include <array>

namespace superbi {

namespace {

constexpr ThetaMask kT1 = 1, kT2 = 2, kT3 = 4;

SuperElement times_theta(const SuperElement& body, ThetaMask mask, const ParamScalar& sign) {
  SuperElement r;
  for (const auto& [m, c] : body.terms()) r.add_term(SuperMonomial{m.x, mask}, sign * c);
  return r;
}

// Binomial expansion of (u + v)^a v^b.
UVPolynomial shifted_power(int a, int b) {
  UVPolynomial r;
  long binom = 1;
  for (int i = 0; i <= a; ++i) {
    r.add_term({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(a - i + b)},
               ParamScalar(binom));
    binom = binom * (a - i) / (i + 1);
  }
  return r;
}

}  // namespace

std::string to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::o1: return "O1";
    case EmbeddingKind::o2: return "O2";
    case EmbeddingKind::e1: return "E1";
    case EmbeddingKind::e2: return "E2";
  }
  return "?";
}

SuperElement embed(EmbeddingKind kind, const UVPolynomial& h) {
  const ParamScalar one(1);
  const ParamScalar minus_one(-1);
  const SuperElement body = uv_lift(h);
  const ThetaMask t123 = kT1 | kT2 | kT3;
  switch (kind) {
    case EmbeddingKind::o1:
      return times_theta(body, kT1, one) + times_theta(body, kT2, minus_one) +
             times_theta(uv_lift(h.d_v()), t123, one);
    case EmbeddingKind::o2:
      return times_theta(body, kT2, one) + times_theta(body, kT3, minus_one) +
             times_theta(uv_lift(h.d_u()), t123, minus_one);
    case EmbeddingKind::e1:
      return times_theta(body, kT1 | kT2, one) + times_theta(body, kT1 | kT3, minus_one) +
             times_theta(body, kT2 | kT3, one);
    case EmbeddingKind::e2:
      return body + times_theta(uv_lift(h.d_u()), kT1 | kT2, one) +
             times_theta(uv_lift(h.d_v()), kT2 | kT3, one);
  }
  throw InvalidArgument("unknown embedding kind");
}

SuperElement KernelComponents::assemble() const {
  return embed(EmbeddingKind::o1, h1) + embed(EmbeddingKind::o2, h2) +
         embed(EmbeddingKind::e1, g1) + embed(EmbeddingKind::e2, g2);
}

const OperatorElement& total_lowering() {
  static const OperatorElement op =
      build_aggregate(GeneratorKind::a_minus, SubsetLabel(7), Params::symbolic());
  return op;
}

std::optional<UVPolynomial> to_uv(const SuperElement& body) {
  // Setting x3 = 0, x2 = v, x1 = u + v inverts the substitution whenever the
  // input really is a polynomial in u and v; the lift-back comparison decides.
  UVPolynomial h;
  for (const auto& [m, c] : body.terms()) {
    if (m.theta != 0) return std::nullopt;
    if (m.x[2] != 0) continue;
    h += c * shifted_power(m.x[0], m.x[1]);
  }
  if (!(uv_lift(h) == body)) return std::nullopt;
  return h;
}

KernelComponents kernel_decompose(const SuperElement& f) {
  SuperElement image = apply(total_lowering(), f);
  if (!image.is_zero()) throw NotInKernel(std::move(image));

  std::array<SuperElement, 8> sectors;
  for (const auto& [m, c] : f.terms()) sectors[m.theta].add_term(SuperMonomial{m.x, 0}, c);
  auto sector = [&](ThetaMask mask) {
    auto h = to_uv(sectors[mask]);
    if (!h) {
      throw InvariantViolation("kernel element has a theta sector that is not a polynomial in u, v");
    }
    return *std::move(h);
  };

  KernelComponents k;
  k.h1 = sector(kT1);
  k.h2 = -sector(kT3);
  k.g2 = sector(0);
  k.g1 = -sector(kT1 | kT3);
  if (!(k.assemble() == f)) {
    throw InvariantViolation("kernel components do not reassemble the input element");
  }
  return k;
}

UVPolynomial UVOperator::apply(const UVPolynomial& h) const {
  UVPolynomial result;
  for (const auto& t : terms_) {
    UVPolynomial d = h;
    for (int i = 0; i < t.du; ++i) d = d.d_u();
    for (int i = 0; i < t.dv; ++i) d = d.d_v();
    result += t.coefficient * d.shift(t.u_power, t.v_power);
  }
  return result;
}

UVOperator UVOperator::operator-() const {
  UVOperator r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

SuperElement ActionIdentity::apply_rhs(const UVPolynomial& h) const {
  SuperElement r;
  for (const auto& [kind, op] : rhs) r += embed(kind, op.apply(h));
  return r;
}

std::vector<ActionIdentity> action_identities(const Params& params) {
  using K = EmbeddingKind;
  using T = UVOperator::Term;
  const ParamScalar two(2);
  const ParamScalar half(Rational(1, 2));
  const ParamScalar three_halves(Rational(3, 2));
  const ParamScalar nu1 = params.nu(1);
  const ParamScalar nu3 = params.nu(3);
  const ParamScalar nu12 = params.nu_sum(12);
  const ParamScalar nu13 = params.nu_sum(13);
  const ParamScalar nu23 = params.nu_sum(23);
  const ParamScalar four_nu1 = ParamScalar(4) * nu1;
  const ParamScalar four_nu3 = ParamScalar(4) * nu3;
  const SubsetLabel s12 = SubsetLabel::parse("12");
  const SubsetLabel s13 = SubsetLabel::parse("13");
  const SubsetLabel s23 = SubsetLabel::parse("23");

  // Terms read c * u^a v^b d_u^i d_v^j.
  auto c = [](const ParamScalar& value) { return T{value, 0, 0, 0, 0}; };

  std::vector<ActionIdentity> ids;
  ids.push_back({"Q12.O1", "Q12 O1 = -O1 (2u du + 2nu12 + 1/2) - O2 (2u dv)", s12, K::o1,
                 {{K::o1, -UVOperator{T{two, 1, 0, 1, 0}, c(two * nu12 + half)}},
                  {K::o2, -UVOperator{T{two, 1, 0, 0, 1}}}}});
  ids.push_back({"Q12.O2", "Q12 O2 = O1 (2u du + 4nu1) + O2 (2u du + 2nu12 - 1/2)", s12, K::o2,
                 {{K::o1, UVOperator{T{two, 1, 0, 1, 0}, c(four_nu1)}},
                  {K::o2, UVOperator{T{two, 1, 0, 1, 0}, c(two * nu12 - half)}}}});
  ids.push_back({"Q12.E1", "Q12 E1 = -E1 (2u du + 2nu12 + 1/2) + E2 (2u)", s12, K::e1,
                 {{K::e1, -UVOperator{T{two, 1, 0, 1, 0}, c(two * nu12 + half)}},
                  {K::e2, UVOperator{T{two, 1, 0, 0, 0}}}}});
  ids.push_back({"Q12.E2", "Q12 E2 = -E1 (2u du dv + 4nu1 dv) + E2 (2u du + 2nu12 - 1/2)", s12,
                 K::e2,
                 {{K::e1, -UVOperator{T{two, 1, 0, 1, 1}, T{four_nu1, 0, 0, 0, 1}}},
                  {K::e2, UVOperator{T{two, 1, 0, 1, 0}, c(two * nu12 - half)}}}});

  // The O1 coefficient enters with a plus sign; with a minus sign the
  // identity leaves 2 (2nu1 - 2nu3 - 1/2) O1(h) behind.
  ids.push_back({"Q13.O1", "Q13 O1 = O1 (2nu1 - 2nu3 - 1/2) - O2 (2(u+v) dv + 4nu3)", s13, K::o1,
                 {{K::o1, UVOperator{c(two * nu1 - two * nu3 - half)}},
                  {K::o2, -UVOperator{T{two, 1, 0, 0, 1}, T{two, 0, 1, 0, 1}, c(four_nu3)}}}});
  ids.push_back({"Q13.O2", "Q13 O2 = -O1 (2(u+v) du + 4nu1) - O2 (2nu1 - 2nu3 + 1/2)", s13, K::o2,
                 {{K::o1, -UVOperator{T{two, 1, 0, 1, 0}, T{two, 0, 1, 1, 0}, c(four_nu1)}},
                  {K::o2, -UVOperator{c(two * nu1 - two * nu3 + half)}}}});
  ids.push_back({"Q13.E1", "Q13 E1 = -E1 (2nu13 - 3/2) - E2 (2u + 2v)", s13, K::e1,
                 {{K::e1, -UVOperator{c(two * nu13 - three_halves)}},
                  {K::e2, -UVOperator{T{two, 1, 0, 0, 0}, T{two, 0, 1, 0, 0}}}}});
  ids.push_back({"Q13.E2",
                 "Q13 E2 = -E1 (2(u+v) du dv + 4nu3 du + 4nu1 dv) + E2 (2nu13 - 1/2)", s13, K::e2,
                 {{K::e1, -UVOperator{T{two, 1, 0, 1, 1}, T{two, 0, 1, 1, 1},
                                      T{four_nu3, 0, 0, 1, 0}, T{four_nu1, 0, 0, 0, 1}}},
                  {K::e2, UVOperator{c(two * nu13 - half)}}}});

  ids.push_back({"Q23.O1", "Q23 O1 = O1 (2v dv + 2nu23 - 1/2) + O2 (2v dv + 4nu3)", s23, K::o1,
                 {{K::o1, UVOperator{T{two, 0, 1, 0, 1}, c(two * nu23 - half)}},
                  {K::o2, UVOperator{T{two, 0, 1, 0, 1}, c(four_nu3)}}}});
  ids.push_back({"Q23.O2", "Q23 O2 = -O1 (2v du) - O2 (2v dv + 2nu23 + 1/2)", s23, K::o2,
                 {{K::o1, -UVOperator{T{two, 0, 1, 1, 0}}},
                  {K::o2, -UVOperator{T{two, 0, 1, 0, 1}, c(two * nu23 + half)}}}});
  ids.push_back({"Q23.E1", "Q23 E1 = -E1 (2v dv + 2nu23 + 1/2) + E2 (2v)", s23, K::e1,
                 {{K::e1, -UVOperator{T{two, 0, 1, 0, 1}, c(two * nu23 + half)}},
                  {K::e2, UVOperator{T{two, 0, 1, 0, 0}}}}});
  ids.push_back({"Q23.E2", "Q23 E2 = -E1 (2v du dv + 4nu3 du) + E2 (2v dv + 2nu23 - 1/2)", s23,
                 K::e2,
                 {{K::e1, -UVOperator{T{two, 0, 1, 1, 1}, T{four_nu3, 0, 0, 1, 0}}},
                  {K::e2, UVOperator{T{two, 0, 1, 0, 1}, c(two * nu23 - half)}}}});
  return ids;
}

VerificationReport check_action_identities(int max_degree, const Params& params) {
  if (max_degree < 2) throw InvalidArgument("max_degree must be at least 2");
  VerificationReport report("actions", params.describe());
  const OspRealization g = OspRealization::standard(params);
  for (const auto& identity : action_identities(params)) {
    const OperatorElement q = g.casimir(identity.casimir);
    report.run(identity.id, identity.anchor, [&]() -> std::pair<std::size_t, std::string> {
      std::size_t failures = 0;
      std::string first;
      for (int d = 0; d <= max_degree; ++d) {
        for (int a = 0; a <= d; ++a) {
          const UVPolynomial h = UVPolynomial::monomial(ParamScalar(1), a, d - a);
          const SuperElement lhs = apply(q, embed(identity.source, h));
          const SuperElement residual = lhs - identity.apply_rhs(h);
          if (residual.is_zero()) continue;
          failures += residual.term_count();
          if (first.empty()) first = "h = " + h.to_string() + ": " + residual.to_string();
        }
      }
      return {failures, first};
    });
  }
  return report;
}

}  // namespace superbi
