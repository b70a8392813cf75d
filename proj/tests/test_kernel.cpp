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

#include <random>

#include "doctest.h"
#include "superbi/errors.hpp"
#include "superbi/kernel.hpp"
#include "superbi/suites.hpp"

using namespace superbi;

namespace {

using K = EmbeddingKind;
const Params sym = Params::symbolic();

SuperElement x(int i) { return SuperElement::x(i); }
SuperElement t(int i) { return SuperElement::theta(i); }
SuperElement one() { return SuperElement::constant(ParamScalar(1)); }
ParamScalar nu(int j) { return ParamScalar::nu(j - 1); }
UVPolynomial mono(int a, int b) { return UVPolynomial::monomial(ParamScalar(1), a, b); }

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("embedding examples") {
  CHECK(embed(K::o1, UVPolynomial::constant(ParamScalar(1))) == t(1) - t(2));
  CHECK(embed(K::e2, UVPolynomial::u()) == x(1) - x(2) + t(1) * t(2));
  CHECK(embed(K::e1, UVPolynomial::v()) ==
        (x(2) - x(3)) * (t(1) * t(2) - t(1) * t(3) + t(2) * t(3)));
  CHECK(embed(K::o2, UVPolynomial::u()) == (x(1) - x(2)) * (t(2) - t(3)) - t(1) * t(2) * t(3));
  CHECK(embed(K::o1, UVPolynomial::v()) == (x(2) - x(3)) * (t(1) - t(2)) + t(1) * t(2) * t(3));
  CHECK(to_string(K::e2) == "E2");
}

TEST_CASE("embeddings land in the kernel") {
  for (K kind : {K::o1, K::o2, K::e1, K::e2})
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        CHECK(apply(total_lowering(), embed(kind, mono(a, b))).is_zero());
}

TEST_CASE("decomposition examples") {
  const KernelComponents a = kernel_decompose(t(1) - t(2));
  CHECK(a == KernelComponents{UVPolynomial::constant(ParamScalar(1)), {}, {}, {}});
  const KernelComponents b = kernel_decompose(x(1) - x(2) + t(1) * t(2));
  CHECK(b == KernelComponents{{}, {}, {}, UVPolynomial::u()});
  try {
    (void)kernel_decompose(t(1));
    FAIL("expected NotInKernel");
  } catch (const NotInKernel& e) {
    CHECK(e.image() == one());
  }
  CHECK_THROWS_AS(kernel_decompose(x(1)), NotInKernel);
}

TEST_CASE("to_uv") {
  CHECK(to_uv(x(1) - x(3)) == UVPolynomial::u() + UVPolynomial::v());
  CHECK_FALSE(to_uv(x(1)).has_value());
  CHECK_FALSE(to_uv(t(1)).has_value());
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const KernelComponents c{random_uv(rng, sym, 4), random_uv(rng, sym, 4), random_uv(rng, sym, 4),
                             random_uv(rng, sym, 4)};
    const SuperElement f = c.assemble();
    CHECK(apply(total_lowering(), f).is_zero());
    CHECK(kernel_decompose(f) == c);
  }
}

TEST_CASE("uv operators") {
  const UVOperator d{{ParamScalar(2), 1, 0, 0, 1}, {ParamScalar(3), 0, 0, 0, 0}};
  // 2 u d_v (u v^2) + 3 u v^2 = 4 u^2 v + 3 u v^2
  CHECK(d.apply(mono(1, 2)) == UVPolynomial::monomial(ParamScalar(4), 2, 1) +
                                   UVPolynomial::monomial(ParamScalar(3), 1, 2));
  CHECK((-d).apply(mono(0, 0)) == UVPolynomial::constant(ParamScalar(-3)));
}

TEST_CASE("action identity examples") {
  const OperatorElement q12 = casimir(SubsetLabel(3), sym);
  const SuperElement lhs = apply(q12, embed(K::e1, mono(0, 0)));
  const ParamScalar c = -(ParamScalar(2) * (nu(1) + nu(2)) + ParamScalar(Rational(1, 2)));
  CHECK(lhs == c * embed(K::e1, mono(0, 0)) + embed(K::e2, ParamScalar(2) * UVPolynomial::u()));

  const OperatorElement q23 = casimir(SubsetLabel(6), sym);
  const ParamScalar n23 = nu(2) + nu(3);
  CHECK(apply(q23, embed(K::o2, UVPolynomial::u())) ==
        -embed(K::o1, ParamScalar(2) * UVPolynomial::v()) -
            embed(K::o2, (ParamScalar(2) * n23 + ParamScalar(Rational(1, 2))) * UVPolynomial::u()));

  const OperatorElement q13 = casimir(SubsetLabel(5), sym);
  const ParamScalar n13 = nu(1) + nu(3);
  CHECK(apply(q13, embed(K::e1, mono(0, 0))) ==
        -embed(K::e1, UVPolynomial::constant(ParamScalar(2) * n13 - ParamScalar(Rational(3, 2)))) -
            embed(K::e2, ParamScalar(2) * (UVPolynomial::u() + UVPolynomial::v())));
}

TEST_CASE("Q13 O1 coefficient sign: the negated form leaves a fixed residual") {
  const OperatorElement q13 = casimir(SubsetLabel(5), sym);
  const ParamScalar c = ParamScalar(2) * nu(1) - ParamScalar(2) * nu(3) - ParamScalar(Rational(1, 2));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) {
      const UVPolynomial h = mono(a, b);
      const UVPolynomial o2_arg = ParamScalar(2) * ((UVPolynomial::u() + UVPolynomial::v()) * h.d_v()) +
                                  (ParamScalar(4) * nu(3)) * h;
      const SuperElement negated = -embed(K::o1, c * h) - embed(K::o2, o2_arg);
      const SuperElement lhs = apply(q13, embed(K::o1, h));
      CHECK(lhs - negated == embed(K::o1, (ParamScalar(2) * c) * h));
      CHECK(lhs == embed(K::o1, c * h) - embed(K::o2, o2_arg));
    }
}

TEST_CASE("all twelve identities") {
  const auto ids = action_identities(sym);
  CHECK(ids.size() == 12);
  const auto report = check_action_identities(3, sym);
  CHECK(report.all_passed());
  CHECK(report.checks().size() == 12);
  for (const auto& id : ids)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b) {
        const UVPolynomial h = mono(a, b);
        CHECK(apply(casimir(id.casimir, sym), embed(id.source, h)) == id.apply_rhs(h));
      }
}

}
