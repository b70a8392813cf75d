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
#include "oracles.hpp"
#include "superbi/errors.hpp"
#include "superbi/osp_model.hpp"
#include "superbi/suites.hpp"
#include "superbi/superweyl.hpp"

using namespace superbi;

namespace {

using Op = OperatorElement;
const Params sym = Params::symbolic();

}  // namespace

TEST_SUITE("superweyl") {

TEST_CASE("apply examples") {
  const Op am = build_generator(GeneratorKind::a_minus, CopyIndex(1), sym);
  const Op a0 = build_generator(GeneratorKind::a_zero, CopyIndex(1), sym);
  CHECK(apply(am, SuperElement::theta(1)) == SuperElement::constant(ParamScalar(1)));
  CHECK(apply(am, SuperElement::x(1)) == SuperElement::theta(1));
  const SuperElement xt = SuperElement::x(1) * SuperElement::theta(1);
  CHECK(apply(a0, xt) == (ParamScalar(3) + ParamScalar(2) * ParamScalar::nu(0)) * xt);
}

TEST_CASE("normal ordering rules") {
  CHECK(Op::dtheta(1) * Op::theta(1) == Op::identity() - Op::theta(1) * Op::dtheta(1));
  CHECK(Op::dx(1) * Op::x(1) == Op::x(1) * Op::dx(1) + Op::identity());
  CHECK(Op::dtheta(1) * Op::theta(2) == -(Op::theta(2) * Op::dtheta(1)));
  CHECK(Op::theta(2) * Op::theta(1) == -(Op::theta(1) * Op::theta(2)));
  CHECK(Op::dtheta(2) * Op::dtheta(1) == -(Op::dtheta(1) * Op::dtheta(2)));
  CHECK((Op::theta(1) * Op::theta(1)).is_zero());
  CHECK((Op::dtheta(3) * Op::dtheta(3)).is_zero());
  CHECK(Op::dx(2) * Op::theta(1) == Op::theta(1) * Op::dx(2));
  const Op am = build_generator(GeneratorKind::a_minus, CopyIndex(1), sym);
  CHECK(normal_compose(am, am) == Op::dx(1));
  CHECK(am.pow(2) == Op::dx(1));
  CHECK(am.pow(0) == Op::identity());
}

TEST_CASE("brackets") {
  const Op am = build_generator(GeneratorKind::a_minus, CopyIndex(1), sym);
  const Op a0 = build_generator(GeneratorKind::a_zero, CopyIndex(1), sym);
  const Op ap = build_generator(GeneratorKind::a_plus, CopyIndex(1), sym);
  const Op p = build_generator(GeneratorKind::parity, CopyIndex(1), sym);
  CHECK(bracket(a0, ap, BracketKind::commutator) == ap);
  CHECK(bracket(ap, am, BracketKind::anticommutator) == a0);
  CHECK(bracket(p, ap, BracketKind::anticommutator).is_zero());
  CHECK(bracket(ap, am, BracketKind::super) == a0);
  CHECK(bracket(a0, ap, BracketKind::super) == ap);
  CHECK_THROWS_AS(bracket(Op::theta(1) + Op::x(1), ap, BracketKind::super), InvalidArgument);
}

TEST_CASE("zero detection") {
  const Op am = build_generator(GeneratorKind::a_minus, CopyIndex(1), sym);
  CHECK(is_zero_operator(am * am - Op::dx(1)));
  CHECK_FALSE(is_zero_operator(build_generator(GeneratorKind::a_plus, CopyIndex(1), sym)));
  NormalWord w;
  w.theta = 1;
  CHECK_FALSE(Op::word(w).is_zero());
  CHECK(is_zero_operator(Op::word(w) * Op::word(w)));
}

TEST_CASE("parity of words") {
  CHECK(Op::theta(1).parity() == 1);
  CHECK((Op::theta(1) * Op::dtheta(2)).parity() == 0);
  CHECK((Op::theta(1) + Op::x(1)).parity() == std::nullopt);
  CHECK(Op().parity() == 0);
}

TEST_CASE("apply matches the letter-by-letter oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const Op a = random_operator(rng, sym);
    const SuperElement f = random_element(rng, sym);
    CHECK(apply(a, f) == oracle::apply(a, f));
  }
}

TEST_CASE("composition matches nested application") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 60; ++i) {
    const Op a = random_operator(rng, sym);
    const Op b = random_operator(rng, sym);
    const SuperElement f = random_element(rng, sym);
    CHECK(oracle::apply(a * b, f) == oracle::apply(a, oracle::apply(b, f)));
  }
}

TEST_CASE("composition is associative and distributive") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const Op a = random_operator(rng, sym);
    const Op b = random_operator(rng, sym);
    const Op c = random_operator(rng, sym);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("rendering") {
  const Op op = Op::x(1) * Op::theta(2) * Op::dx(1) +
                (ParamScalar(2) * ParamScalar::nu(0)) * Op::theta(1);
  CHECK(op.to_string() == "x1*t2*dx1 + (2*nu1)*t1");
  CHECK(Op().to_string() == "0");
}

}
