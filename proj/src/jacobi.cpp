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

#include "superbi/jacobi.hpp"

#include "render.hpp"
#include "superbi/errors.hpp"

namespace superbi {

ParamUnivariate ParamUnivariate::constant(const ParamScalar& c) { return monomial(c, 0); }

ParamUnivariate ParamUnivariate::monomial(const ParamScalar& c, int degree) {
  if (degree < 0) throw InvalidArgument("negative degree");
  ParamUnivariate p;
  p.add_term(degree, c);
  return p;
}

ParamScalar ParamUnivariate::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? ParamScalar() : it->second;
}

void ParamUnivariate::add_term(int degree, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamUnivariate& ParamUnivariate::operator+=(const ParamUnivariate& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, c);
  return *this;
}

ParamUnivariate& ParamUnivariate::operator-=(const ParamUnivariate& rhs) {
  for (const auto& [d, c] : rhs.terms_) add_term(d, -c);
  return *this;
}

ParamUnivariate operator*(const ParamScalar& c, const ParamUnivariate& p) {
  ParamUnivariate r;
  for (const auto& [d, v] : p.terms_) r.add_term(d, c * v);
  return r;
}

ParamUnivariate operator*(const ParamUnivariate& a, const ParamUnivariate& b) {
  ParamUnivariate r;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  }
  return r;
}

ParamUnivariate ParamUnivariate::derivative() const {
  ParamUnivariate r;
  for (const auto& [d, c] : terms_) {
    if (d > 0) r.add_term(d - 1, ParamScalar(static_cast<long>(d)) * c);
  }
  return r;
}

ParamUnivariate ParamUnivariate::shift(int n) const {
  ParamUnivariate r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d + n, c);
  return r;
}

ParamUnivariate ParamUnivariate::compose_affine(const ParamScalar& a, const ParamScalar& b) const {
  // Horner in the substituted variable.
  const ParamUnivariate line = constant(a) + monomial(b, 1);
  ParamUnivariate r;
  for (int d = degree(); d >= 0; --d) r = r * line + constant(coefficient(d));
  return r;
}

UVPolynomial ParamUnivariate::homogenize(int total_degree) const {
  if (degree() > total_degree) {
    throw InvalidArgument("cannot homogenize a degree " + std::to_string(degree()) +
                          " polynomial to total degree " + std::to_string(total_degree));
  }
  UVPolynomial h;
  for (const auto& [d, c] : terms_) h.add_term({static_cast<std::uint16_t>(total_degree - d),
                                                static_cast<std::uint16_t>(d)},
                                               c);
  return h;
}

std::string ParamUnivariate::to_string(const std::string& variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    detail::append_factor(mono, variable, it->first);
    detail::append_term(out, it->second, mono);
  }
  return out;
}

namespace {

// Coefficients c_j of ((1 - x)/2)^j in P_k^(alpha,beta)(x):
// c_j = (alpha+1+j)_{k-j} (-k)_j (k+alpha+beta+1)_j / (k! j!).
std::vector<ParamScalar> hypergeometric_weights(int k, const ParamScalar& alpha,
                                                const ParamScalar& beta) {
  std::vector<ParamScalar> weights;
  Rational k_factorial(1);
  for (int i = 2; i <= k; ++i) k_factorial *= Rational(i);
  const ParamScalar top = ParamScalar(static_cast<long>(k)) + alpha + beta + ParamScalar(1);
  ParamScalar rising_minus_k(1);  // (-k)_j
  ParamScalar rising_top(1);      // (k+alpha+beta+1)_j
  Rational j_factorial(1);
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      rising_minus_k *= ParamScalar(static_cast<long>(j - 1 - k));
      rising_top *= top + ParamScalar(static_cast<long>(j - 1));
      j_factorial *= Rational(j);
    }
    ParamScalar ratio(1);  // (alpha+1)_k / (alpha+1)_j
    for (int i = j; i < k; ++i) ratio *= alpha + ParamScalar(static_cast<long>(i + 1));
    weights.push_back(ParamScalar(Rational(1) / (k_factorial * j_factorial)) * ratio *
                      rising_minus_k * rising_top);
  }
  return weights;
}

}  // namespace

ParamUnivariate jacobi(int k, const ParamScalar& alpha, const ParamScalar& beta) {
  if (k < -1) throw InvalidArgument("Jacobi degree must be at least -1");
  if (k == -1) return {};
  const auto weights = hypergeometric_weights(k, alpha, beta);
  const ParamUnivariate half_gap =
      ParamUnivariate::constant(ParamScalar(Rational(1, 2))) -
      ParamUnivariate::monomial(ParamScalar(Rational(1, 2)), 1);  // (1 - x)/2
  ParamUnivariate power = ParamUnivariate::constant(ParamScalar(1));
  ParamUnivariate result;
  for (int j = 0; j <= k; ++j) {
    result += weights[static_cast<std::size_t>(j)] * power;
    power = power * half_gap;
  }
  return result;
}

ParamUnivariate jacobi_shifted(int k, const ParamScalar& alpha, const ParamScalar& beta) {
  return jacobi(k, alpha, beta).compose_affine(ParamScalar(1), ParamScalar(2));
}

namespace {

std::pair<std::size_t, std::string> univariate_residual(const ParamUnivariate& r) {
  if (r.is_zero()) return {0, {}};
  return {r.terms().size(), r.to_string()};
}

// z(1+z) phi'' - (slope z + intercept) phi' + constant phi.
ParamUnivariate hypergeometric_operator(const ParamUnivariate& phi, const ParamScalar& slope,
                                        const ParamScalar& intercept, const ParamScalar& constant) {
  const ParamUnivariate d1 = phi.derivative();
  const ParamUnivariate d2 = d1.derivative();
  const ParamUnivariate z_one_plus_z =
      ParamUnivariate::monomial(ParamScalar(1), 1) + ParamUnivariate::monomial(ParamScalar(1), 2);
  const ParamUnivariate linear =
      ParamUnivariate::monomial(slope, 1) + ParamUnivariate::constant(intercept);
  return z_one_plus_z * d2 - linear * d1 + constant * phi;
}

}  // namespace

VerificationReport verify_jacobi_identities(int max_k, const Params& params) {
  if (max_k < 0) throw InvalidArgument("max_k must be nonnegative");
  VerificationReport report("jacobi", params.describe());
  const ParamScalar alpha = params.nu(1);
  const ParamScalar beta = params.nu(2);
  const ParamScalar one(1);
  const ParamUnivariate t = ParamUnivariate::monomial(one, 1);
  const ParamUnivariate t_plus_one = t + ParamUnivariate::constant(one);
  for (int k = 0; k <= max_k; ++k) {
    const ParamScalar kk(static_cast<long>(k));
    const ParamUnivariate p = jacobi_shifted(k, alpha, beta);
    report.run("contiguity_alpha.k" + std::to_string(k),
               "(-k + (t+1) dt) P_k^(a,b)(1+2t) = (k+b) P_{k-1}^(a+1,b)(1+2t)", [&] {
                 const ParamUnivariate lhs = t_plus_one * p.derivative() - kk * p;
                 const ParamUnivariate rhs = (kk + beta) * jacobi_shifted(k - 1, alpha + one, beta);
                 return univariate_residual(lhs - rhs);
               });
    report.run("contiguity_beta.k" + std::to_string(k),
               "(k - t dt) P_k^(a,b)(1+2t) = (a+k) P_{k-1}^(a,b+1)(1+2t)", [&] {
                 const ParamUnivariate lhs = kk * p - t * p.derivative();
                 const ParamUnivariate rhs = (alpha + kk) * jacobi_shifted(k - 1, alpha, beta + one);
                 return univariate_residual(lhs - rhs);
               });
  }
  const ParamScalar two(2);
  const ParamScalar nu1 = params.nu(1);
  const ParamScalar nu2 = params.nu(2);
  const ParamScalar nu12 = params.nu_sum(12);
  for (int n = 0; n <= max_k; ++n) {
    const ParamScalar nn(static_cast<long>(n));
    for (int k = 0; k <= n; ++k) {
      const ParamScalar kk(static_cast<long>(k));
      const std::string suffix = ".N" + std::to_string(n) + ".k" + std::to_string(k);
      report.run("ode_odd" + suffix,
                 "[z(1+z)dz^2 - ((2nu12+2N-1)z + 2nu1+N)dz + k(2N+2nu12-k)] "
                 "P_k^(-N-2nu1-1,-N-2nu2)(1+2z) = 0",
                 [&] {
                   const ParamUnivariate phi =
                       jacobi_shifted(k, -nn - two * nu1 - one, -nn - two * nu2);
                   return univariate_residual(hypergeometric_operator(
                       phi, two * nu12 + two * nn - one, two * nu1 + nn,
                       kk * (two * nn + two * nu12 - kk)));
                 });
      report.run("ode_even" + suffix,
                 "[z(1+z)dz^2 - (2(nu12+N-1)z + 2nu1+N-1)dz + k(2N+2nu12-k-1)] "
                 "P_k^(-N-2nu1,-N-2nu2)(1+2z) = 0",
                 [&] {
                   const ParamUnivariate phi = jacobi_shifted(k, -nn - two * nu1, -nn - two * nu2);
                   return univariate_residual(hypergeometric_operator(
                       phi, two * (nu12 + nn - one), two * nu1 + nn - one,
                       kk * (two * nn + two * nu12 - kk - one)));
                 });
    }
  }
  return report;
}

}  // namespace superbi
