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
#include "superbi/param_polynomial.hpp"
#include "superbi/param_scalar.hpp"
#include "superbi/params.hpp"
#include "superbi/rational.hpp"

using namespace superbi;

namespace {

const ParamPolynomial n1 = ParamPolynomial::variable(0);
const ParamPolynomial n2 = ParamPolynomial::variable(1);
const ParamPolynomial n3 = ParamPolynomial::variable(2);

ParamScalar random_scalar(std::mt19937_64& rng) {
  auto poly = [&] {
    ParamPolynomial p;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      ParamExponents e{static_cast<std::uint16_t>(rng() % 2), static_cast<std::uint16_t>(rng() % 2),
                       static_cast<std::uint16_t>(rng() % 2)};
      p.add_term(e, oracle::small_rational(rng));
    }
    return p;
  };
  ParamPolynomial den = poly();
  while (den.is_zero()) den = poly();
  return ParamScalar::fraction(poly(), den);
}

}  // namespace

TEST_SUITE("exact-scalars") {

TEST_CASE("rational parse and arithmetic") {
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0/5").is_zero());
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(5, 10).to_string() == "1/2");
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("abc"), InvalidArgument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("polynomial order and rendering") {
  const ParamPolynomial p = ParamPolynomial(2) * n1 * n1 - n2 + ParamPolynomial(Rational(1, 2));
  CHECK(p.to_string() == "2*nu1^2 - nu2 + 1/2");
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.leading_term().second == Rational(2));
  CHECK(ParamPolynomial().to_string() == "0");
  CHECK((p - p).is_zero());
}

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(n1 * n1 - n2 * n2, n1 + n2) == n1 + n2);
  CHECK(poly_gcd(n1 * n1 + n3, ParamPolynomial(1)) == ParamPolynomial(1));
  CHECK(poly_gcd(n1 * n2, n1 * n3) == n1);
  CHECK(poly_gcd(ParamPolynomial(), n2 * Rational(3)) == n2);
}

TEST_CASE("gcd divides both arguments at sampled points") {
  std::mt19937_64 rng(7);
  const ParamPolynomial common = n1 - ParamPolynomial(2) * n3 + ParamPolynomial(1);
  const ParamPolynomial a = common * (n2 + n3) * n1;
  const ParamPolynomial b = common * (n2 - n1) * (n1 + ParamPolynomial(3));
  const ParamPolynomial g = poly_gcd(a, b);
  CHECK(g == common);
  for (int i = 0; i < 5; ++i) {
    const ParamPoint p = oracle::random_point(rng);
    const Rational gv = g.evaluate(p);
    if (gv.is_zero()) continue;
    CHECK((a.evaluate(p) / gv) == (a.divide_exact(g)->evaluate(p)));
    CHECK((b.evaluate(p) / gv) == (b.divide_exact(g)->evaluate(p)));
  }
}

TEST_CASE("exact division") {
  CHECK(*(n1 * n1 - n2 * n2).divide_exact(n1 - n2) == n1 + n2);
  CHECK_FALSE((n1 * n1 + n2).divide_exact(n1).has_value());
}

TEST_CASE("canonical fractions") {
  const ParamScalar q = ParamScalar::fraction(n1 * n1 - n2 * n2, n1 - n2);
  CHECK(q == ParamScalar(n1 + n2));
  CHECK(q.is_polynomial());
  const ParamScalar a = ParamScalar(2) * ParamScalar::nu(0) - ParamScalar(Rational(1, 2));
  CHECK(a + ParamScalar(0) == a);
  CHECK(a * ParamScalar(1) == a);
  CHECK(ParamScalar::fraction(ParamPolynomial(2) * n1, ParamPolynomial(-4) * n2) ==
        ParamScalar::fraction(-n1, ParamPolynomial(2) * n2));
  CHECK_THROWS_AS(ParamScalar::fraction(n1, ParamPolynomial()), DivisionByZero);
  CHECK_THROWS_AS(a / ParamScalar(0), DivisionByZero);
  CHECK_THROWS_AS(scalar_arith(a, ParamScalar(), ScalarOp::div), DivisionByZero);
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const ParamScalar a = random_scalar(rng);
    const ParamScalar b = random_scalar(rng);
    const ParamScalar c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK((a / a).is_one());
  }
}

TEST_CASE("arithmetic commutes with evaluation") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const ParamScalar a = random_scalar(rng);
    const ParamScalar b = random_scalar(rng);
    const ParamPoint p = oracle::random_point(rng);
    try {
      const Rational av = scalar_eval(a, p);
      const Rational bv = scalar_eval(b, p);
      CHECK(scalar_eval(a + b, p) == av + bv);
      CHECK(scalar_eval(a * b, p) == av * bv);
      if (!bv.is_zero() && !b.is_zero()) CHECK(scalar_eval(a / b, p) == av / bv);
    } catch (const VanishingDenominator&) {
    }
  }
}

TEST_CASE("scalar_eval examples") {
  const ParamScalar a = ParamScalar(2) * ParamScalar::nu(0) - ParamScalar(Rational(1, 2));
  CHECK(scalar_eval(a, {Rational(1, 2), Rational(7), Rational(9)}) == Rational(1, 2));
  const int n = 2;
  const int k = 1;
  const ParamScalar b = ParamScalar::nu(0) + ParamScalar::nu(1) + ParamScalar(n - k);
  CHECK(scalar_eval(b, {Rational(1, 3), Rational(1, 5), Rational(0)}) == Rational(23, 15));
  // Substitute first, then add.
  CHECK(Rational(1, 3) + Rational(1, 5) + Rational(n - k) == Rational(23, 15));
  const ParamScalar c = ParamScalar(1) / (ParamScalar::nu(0) - ParamScalar::nu(1));
  try {
    (void)scalar_eval(c, {Rational(1, 2), Rational(1, 2), Rational(0)});
    FAIL("expected a vanishing denominator");
  } catch (const VanishingDenominator& e) {
    CHECK(e.denominator() == "nu1 - nu2");
  }
}

TEST_CASE("parameter bindings") {
  const ParamPoint p = parse_param_point("nu3=-7/11,nu1=1/2,nu2=3/5");
  CHECK(p[0] == Rational(1, 2));
  CHECK(p[2] == Rational(-7, 11));
  CHECK_THROWS_AS(parse_param_point("nu1=1,nu2=2"), InvalidArgument);
  CHECK_THROWS_AS(parse_param_point("nu1=1,nu2=2,nu4=3"), InvalidArgument);
  const Params s = Params::symbolic();
  const Params e = Params::at(p);
  CHECK(s.describe() == "symbolic");
  CHECK(e.describe() == "nu1=1/2,nu2=3/5,nu3=-7/11");
  CHECK(s.nu_sum(12) == ParamScalar::nu(0) + ParamScalar::nu(1));
  CHECK(e.nu_sum(123) == ParamScalar(Rational(1, 2) + Rational(3, 5) + Rational(-7, 11)));
  CHECK(e.bind(ParamScalar::nu(1) * ParamScalar(2)) == ParamScalar(Rational(6, 5)));
}

TEST_CASE("generic point sampler avoids registered loci") {
  GenericPointSampler sampler(5);
  for (const auto& p : degeneracy_loci(4)) sampler.avoid(p);
  CHECK(sampler.avoided_count() > 0);
  for (int i = 0; i < 10; ++i) {
    const ParamPoint p = sampler.sample();
    for (const auto& locus : degeneracy_loci(4)) CHECK_FALSE(locus.evaluate(p).is_zero());
  }
}

}
