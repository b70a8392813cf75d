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
#include "superbi/eigenbasis.hpp"
#include "superbi/errors.hpp"
#include "superbi/jacobi.hpp"
#include "superbi/linear_algebra.hpp"

using namespace superbi;

namespace {

using K = EmbeddingKind;
const Params sym = Params::symbolic();

ParamScalar nu(int j) { return ParamScalar::nu(j - 1); }
ParamScalar r(long p, long q = 1) { return ParamScalar(Rational(p, q)); }
SuperElement t(int i) { return SuperElement::theta(i); }

// Binomial coefficient with a rational upper argument.
Rational binom(const Rational& z, int m) {
  Rational out(1);
  for (int i = 0; i < m; ++i) out = out * (z - Rational(i)) / Rational(i + 1);
  return out;
}

// P_k^(a,b)(x) = sum_s C(k+a, k-s) C(k+b, s) ((x-1)/2)^s ((x+1)/2)^(k-s).
Rational jacobi_oracle(int k, const Rational& a, const Rational& b, const Rational& x) {
  Rational out(0);
  const Rational lo = (x - Rational(1)) / Rational(2);
  const Rational hi = (x + Rational(1)) / Rational(2);
  for (int s = 0; s <= k; ++s)
    out += binom(Rational(k) + a, k - s) * binom(Rational(k) + b, s) * lo.pow(s) * hi.pow(k - s);
  return out;
}

Rational eval_univariate(const ParamUnivariate& p, const Rational& z, const ParamPoint& point) {
  Rational out(0);
  for (const auto& [d, c] : p.terms()) out += c.evaluate(point) * z.pow(static_cast<unsigned>(d));
  return out;
}

}  // namespace

TEST_SUITE("jacobi") {

TEST_CASE("low degrees") {
  const ParamScalar a = nu(1);
  const ParamScalar b = nu(2);
  CHECK(jacobi(-1, a, b).is_zero());
  CHECK(jacobi(0, a, b) == ParamUnivariate::constant(ParamScalar(1)));
  // (a+1) + (a+b+2)(x-1)/2
  const ParamUnivariate p1 =
      ParamUnivariate::constant(a + r(1) - (a + b + r(2)) * r(1, 2)) +
      ParamUnivariate::monomial((a + b + r(2)) * r(1, 2), 1);
  CHECK(jacobi(1, a, b) == p1);
  CHECK(jacobi_shifted(1, a, b) == p1.compose_affine(r(1), r(2)));
}

TEST_CASE("agrees with the binomial sum at rational points") {
  std::mt19937_64 rng(31);
  for (int k = 0; k <= 6; ++k)
    for (int trial = 0; trial < 4; ++trial) {
      const ParamPoint point = oracle::random_point(rng);
      const Rational x = oracle::small_rational(rng);
      const ParamUnivariate symbolic = jacobi(k, nu(1), nu(2));
      CHECK(eval_univariate(symbolic, x, point) == jacobi_oracle(k, point[0], point[1], x));
      const ParamUnivariate bound = jacobi(k, ParamScalar(point[0]), ParamScalar(point[1]));
      CHECK(eval_univariate(bound, x, point) == jacobi_oracle(k, point[0], point[1], x));
    }
}

TEST_CASE("univariate helpers") {
  const ParamUnivariate p = ParamUnivariate::monomial(r(3), 2) + ParamUnivariate::constant(r(1));
  CHECK(p.derivative() == ParamUnivariate::monomial(r(6), 1));
  CHECK(p.shift(1).degree() == 3);
  CHECK(p.homogenize(3) == UVPolynomial::monomial(r(3), 1, 2) + UVPolynomial::monomial(r(1), 3, 0));
  CHECK_THROWS_AS(p.homogenize(1), InvalidArgument);
  CHECK(p.to_string() == "3*z^2 + 1");
}

TEST_CASE("contiguity and ODE identities") {
  const auto report = verify_jacobi_identities(4, sym);
  CHECK(report.all_passed());
  CHECK(report.find("contiguity_alpha.k1") != nullptr);
  CHECK(report.find("ode_odd.N3.k2") != nullptr);
}

}

TEST_SUITE("linear-algebra") {

TEST_CASE("solve and rank") {
  ParamMatrix a(2, 2);
  a(0, 0) = nu(1);
  a(0, 1) = r(1);
  a(1, 0) = r(1);
  a(1, 1) = nu(2);
  const ParamScalar det = nu(1) * nu(2) - r(1);
  const auto x = solve(a, {r(1), r(0)});
  CHECK(x[0] == nu(2) / det);
  CHECK(x[1] == -r(1) / det);
  CHECK(rank(a) == 2);

  ParamMatrix s(3, 2);
  s(0, 0) = nu(1);
  s(0, 1) = nu(1) * nu(3);
  s(1, 0) = r(2);
  s(1, 1) = r(2) * nu(3);
  CHECK(rank(s) == 1);
  CHECK_THROWS_AS(solve(s, {r(1), r(0), r(0)}), SingularSystem);
  CHECK_THROWS_AS(solve(a, {r(1)}), InvalidArgument);

  ParamMatrix tall(3, 2);
  tall(0, 0) = r(1);
  tall(1, 1) = r(1);
  tall(2, 0) = r(1);
  CHECK_THROWS_AS(solve(tall, {r(1), r(0), r(0)}), InvariantViolation);
  const auto y = solve(tall, {r(2), nu(3), r(2)});
  CHECK(y[0] == r(2));
  CHECK(y[1] == nu(3));
}

TEST_CASE("multiple right-hand sides") {
  ParamMatrix a(2, 2);
  a(0, 0) = nu(1);
  a(1, 1) = nu(2);
  a(0, 1) = nu(3);
  ParamMatrix b(2, 2);
  b(0, 0) = r(1);
  b(1, 1) = r(1);
  const ParamMatrix inv = solve(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      ParamScalar sum;
      for (std::size_t k = 0; k < 2; ++k) sum += a(i, k) * inv(k, j);
      CHECK(sum == (i == j ? r(1) : r(0)));
    }
}

}

TEST_SUITE("eigenbasis") {

TEST_CASE("labels") {
  CHECK(EigenLabel(Subspace::odd, Sign::plus, 1, 3).to_string() == "odd+ k=1 N=3");
  CHECK_THROWS_AS(EigenLabel(Subspace::odd, Sign::minus, 4, 3), InvalidArgument);
  CHECK_THROWS_AS(EigenLabel(Subspace::even, Sign::minus, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(EigenLabel(Subspace::even, Sign::plus, -1, 3), InvalidArgument);
  CHECK_NOTHROW(EigenLabel(Subspace::even, Sign::plus, 3, 3));
  CHECK(basis_labels(Subspace::odd, 2).size() == 6);
  CHECK(basis_labels(Subspace::even, 2).size() == 5);
}

TEST_CASE("eigenvector examples") {
  const SuperElement f0 = build_eigenvector(EigenLabel(Subspace::odd, Sign::plus, 0, 0), sym);
  CHECK(f0 == t(1) - t(2) + ((nu(1) + nu(2)) / nu(1)) * (t(2) - t(3)));
  const SuperElement e0 = build_eigenvector(EigenLabel(Subspace::even, Sign::plus, 0, 0), sym);
  CHECK(e0 == SuperElement::constant(r(1)));
  for (int n = 0; n <= 3; ++n) {
    const auto c = eigen_components(EigenLabel(Subspace::odd, Sign::minus, 0, n), sym);
    CHECK(c.g.is_zero());
    CHECK(build_eigenvector(EigenLabel(Subspace::odd, Sign::minus, 0, n), sym) ==
          embed(K::o1, UVPolynomial::monomial(r(1), n, 0)));
  }
}

TEST_CASE("eigenvalues against the direct Casimir action") {
  const OperatorElement q123 = casimir(SubsetLabel(7), sym);
  const OperatorElement q12 = casimir(SubsetLabel(3), sym);
  const ParamScalar n12 = nu(1) + nu(2);
  const ParamScalar n123 = n12 + nu(3);
  for (int n = 0; n <= 2; ++n)
    for (const auto& label : basis_labels(Subspace::odd, n)) {
      const SuperElement f = build_eigenvector(label, sym);
      const ParamScalar s = label.sign == Sign::plus ? r(1) : r(-1);
      CHECK(apply(q123, f) == (-(r(2 * n) + r(2) * n123 + r(1, 2))) * f);
      CHECK(apply(q12, f) == (s * r(2) * (r(n - label.k) + n12) - r(1, 2)) * f);
    }
  for (int n = 0; n <= 2; ++n)
    for (const auto& label : basis_labels(Subspace::even, n)) {
      const SuperElement f = build_eigenvector(label, sym);
      const ParamScalar s = label.sign == Sign::plus ? r(1) : r(-1);
      CHECK(apply(q123, f) == (r(2 * n) + r(2) * n123 - r(1, 2)) * f);
      CHECK(apply(q12, f) == (s * r(2) * (r(n - label.k) + n12 - r(1, 2)) + r(1, 2)) * f);
    }
}

TEST_CASE("verify_eigenpair reports") {
  const auto report = verify_eigenpair(EigenLabel(Subspace::even, Sign::minus, 1, 3), sym);
  CHECK(report.all_passed());
  CHECK(report.checks().size() == 7);
}

TEST_CASE("basis ranks") {
  CHECK(basis_rank(Subspace::odd, 0, sym) == 2);
  CHECK(basis_rank(Subspace::even, 0, sym) == 1);
  CHECK(basis_rank(Subspace::even, 3, sym) == 7);
  CHECK(basis_rank(Subspace::odd, 2, sym) == 6);
}

TEST_CASE("component formulas") {
  CHECK(verify_component_formulas(3, sym).all_passed());
}

TEST_CASE("tridiagonal coefficients match closed forms") {
  const int n = 2;
  const ParamScalar n12 = nu(1) + nu(2);
  const ParamScalar n123 = n12 + nu(3);
  const auto odd = tridiagonal_matrix(Subspace::odd, n, sym);
  const EigenLabel p0(Subspace::odd, Sign::plus, 0, n);
  const EigenLabel m0(Subspace::odd, Sign::minus, 0, n);
  const EigenLabel m1(Subspace::odd, Sign::minus, 1, n);
  CHECK(odd.coefficient(p0, m0) ==
        (r(2) * nu(2) + r(n)) * (r(2) * n123 + r(2 * n)) / (n12 + r(n)));
  // alpha-_k gamma+_k at k = 0.
  const ParamScalar d = r(2) * n12 + r(2 * n - 1);
  CHECK(odd.coefficient(m1, p0) * odd.coefficient(p0, m1) ==
        r(4 * 1 * n) * (r(2) * n12 + r(2 * n)) * (r(2) * n12 + r(n - 1)) / (d * d));
  CHECK(odd.coefficient(p0, EigenLabel(Subspace::odd, Sign::plus, 2, n)).is_zero());

  const auto even = tridiagonal_matrix(Subspace::even, n, sym);
  const EigenLabel em0(Subspace::even, Sign::minus, 0, n);
  const EigenLabel ep1(Subspace::even, Sign::plus, 1, n);
  CHECK(even.coefficient(em0, ep1) == r(1) * (r(2) * n12 + r(2 * n - 1)) / (n12 + r(n - 1)));
  CHECK(verify_tridiagonal(odd, sym).all_passed());
  CHECK(verify_tridiagonal(even, sym).all_passed());
}

TEST_CASE("diagonal sums equal the Q23 spectrum") {
  const ParamScalar n23 = nu(2) + nu(3);
  for (int n = 0; n <= 2; ++n) {
    const auto m = tridiagonal_matrix(Subspace::even, n, sym);
    ParamScalar trace;
    for (std::size_t i = 0; i < m.basis.size(); ++i) trace += m.entries(i, i);
    ParamScalar expected;
    for (const auto& label : m.basis) {
      const ParamScalar s = label.sign == Sign::plus ? r(1) : r(-1);
      expected += s * r(2) * (r(n - label.k) + n23 - r(1, 2)) + r(1, 2);
    }
    CHECK(trace == expected);
  }
}

TEST_CASE("evaluated binding agrees with symbolic evaluation") {
  const ParamPoint p{Rational(1, 7), Rational(-3, 11), Rational(5, 13)};
  const Params at = Params::at(p);
  for (const auto& label : basis_labels(Subspace::odd, 2))
    CHECK(build_eigenvector(label, at) == oracle::at(build_eigenvector(label, sym), p));
}

}
