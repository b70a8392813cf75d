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

#include "superbi/eigenbasis.hpp"

#include <map>
#include <tuple>

#include "superbi/errors.hpp"
#include "superbi/superweyl.hpp"

namespace superbi {

std::string to_string(Subspace s) { return s == Subspace::odd ? "odd" : "even"; }
std::string to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

EigenLabel::EigenLabel(Subspace subspace_, Sign sign_, int k_, int n_)
    : subspace(subspace_), sign(sign_), k(k_), n(n_) {
  if (n < 0 || k < 0) throw InvalidArgument("eigen label indices must be nonnegative");
  if (k > n) throw InvalidArgument("eigen label requires k <= N");
  if (subspace == Subspace::even && sign == Sign::minus && k >= n) {
    throw InvalidArgument("even minus family requires k < N");
  }
}

std::string EigenLabel::to_string() const {
  return superbi::to_string(subspace) + superbi::to_string(sign) + " k=" + std::to_string(k) +
         " N=" + std::to_string(n);
}

namespace {

std::string label_id(const EigenLabel& l) {
  return to_string(l.subspace) + (l.sign == Sign::plus ? "+" : "-") + ".N" + std::to_string(l.n) +
         ".k" + std::to_string(l.k);
}

ParamScalar integer(long v) { return ParamScalar(v); }

UVPolynomial homogenized_jacobi(int k, const ParamScalar& alpha, const ParamScalar& beta,
                                int degree) {
  const ParamUnivariate p = jacobi_shifted(k, alpha, beta);
  if (p.is_zero()) return {};
  return p.homogenize(degree);
}

std::pair<std::size_t, std::string> element_residual(const SuperElement& r) {
  if (r.is_zero()) return {0, {}};
  return {r.term_count(), r.to_string()};
}

std::pair<std::size_t, std::string> uv_residual(const UVPolynomial& r) {
  if (r.is_zero()) return {0, {}};
  return {r.terms().size(), r.to_string()};
}

}  // namespace

EigenComponents eigen_components(const EigenLabel& label, const Params& params) {
  const ParamScalar nu1 = params.nu(1);
  const ParamScalar nu2 = params.nu(2);
  const ParamScalar nu12 = params.nu_sum(12);
  const ParamScalar n = integer(label.n);
  const ParamScalar k = integer(label.k);
  const ParamScalar two(2);
  const ParamScalar one(1);
  EigenComponents c;
  if (label.subspace == Subspace::odd) {
    c.h = homogenized_jacobi(label.k, -n - two * nu1 - one, -n - two * nu2, label.n);
    if (label.sign == Sign::plus) {
      c.g = ((two * n + two * nu12 - k) / (n + two * nu1 - k)) *
            homogenized_jacobi(label.k, -n - two * nu1, -n - two * nu2, label.n);
    } else {
      c.g = -homogenized_jacobi(label.k - 1, -n - two * nu1, -n - two * nu2, label.n);
    }
  } else {
    c.g = homogenized_jacobi(label.k, -n - two * nu1, -n - two * nu2, label.n);
    if (label.sign == Sign::plus) {
      c.h = (n + two * nu1 - k) *
            homogenized_jacobi(label.k - 1, -n - two * nu1, -n - two * nu2 + one, label.n - 1);
    } else {
      c.h = (k + one - two * n - two * nu12) *
            homogenized_jacobi(label.k, -n - two * nu1, -n - two * nu2 + one, label.n - 1);
    }
  }
  return c;
}

SuperElement build_eigenvector(const EigenLabel& label, const Params& params) {
  const EigenComponents c = eigen_components(label, params);
  if (label.subspace == Subspace::odd) {
    return embed(EmbeddingKind::o1, c.h) + embed(EmbeddingKind::o2, c.g);
  }
  return embed(EmbeddingKind::e1, c.h) + embed(EmbeddingKind::e2, c.g);
}

ParamScalar total_eigenvalue(const EigenLabel& label, const Params& params) {
  const ParamScalar base = integer(2L * label.n) + ParamScalar(2) * params.nu_sum(123);
  const ParamScalar half(Rational(1, 2));
  return label.subspace == Subspace::odd ? -(base + half) : base - half;
}

ParamScalar intermediate_eigenvalue(const EigenLabel& label, const Params& params) {
  const ParamScalar half(Rational(1, 2));
  const ParamScalar sign(label.sign == Sign::plus ? 1L : -1L);
  const ParamScalar gap = integer(label.n - label.k) + params.nu_sum(12);
  if (label.subspace == Subspace::odd) return sign * ParamScalar(2) * gap - half;
  return sign * ParamScalar(2) * (gap - half) + half;
}

VerificationReport verify_eigenpair(const EigenLabel& label, const Params& params) {
  VerificationReport report("eigen", params.describe());
  const std::string id = label_id(label);
  const SuperElement f = build_eigenvector(label, params);
  const OspRealization model = OspRealization::standard(params);
  const bool odd = label.subspace == Subspace::odd;
  report.run(id + ".Q123",
             odd ? "Q123 f = -(2N + 2nu123 + 1/2) f" : "Q123 f = (2N + 2nu123 - 1/2) f", [&] {
               const SuperElement image = apply(model.casimir(SubsetLabel::parse("123")), f);
               return element_residual(image - total_eigenvalue(label, params) * f);
             });
  report.run(id + ".Q12",
             odd ? "Q12 f = (+-2(N - k + nu12) - 1/2) f"
                 : "Q12 f = (+-2(N - k + nu12 - 1/2) + 1/2) f",
             [&] {
               const SuperElement image = apply(model.casimir(SubsetLabel::parse("12")), f);
               return element_residual(image - intermediate_eigenvalue(label, params) * f);
             });
  report.run(id + ".kernel", "A-^(123) f = 0",
             [&] { return element_residual(apply(total_lowering(), f)); });
  report.run(id + ".parity", odd ? "f lies in the odd subspace" : "f lies in the even subspace",
             [&] {
               const GradedParts parts = grade_split(f);
               return element_residual(odd ? parts.even : parts.odd);
             });
  report.run(id + ".homogeneous",
             odd ? "(sum x_i dx_i + 1/2 sum t_i dt_i) f = (N + 1/2) f"
                 : "(sum x_i dx_i + 1/2 sum t_i dt_i) f = N f",
             [&] {
               OperatorElement euler;
               for (int i = 1; i <= 3; ++i) {
                 euler += OperatorElement::x(i) * OperatorElement::dx(i) +
                          ParamScalar(Rational(1, 2)) *
                              (OperatorElement::theta(i) * OperatorElement::dtheta(i));
               }
               const ParamScalar degree =
                   integer(label.n) + ParamScalar(odd ? Rational(1, 2) : Rational(0));
               return element_residual(apply(euler, f) - degree * f);
             });
  report.run(id + ".component_degrees",
             odd ? "h and g homogeneous of degree N" : "g of degree N and h of degree N - 1",
             [&]() -> std::pair<std::size_t, std::string> {
               const EigenComponents c = eigen_components(label, params);
               const int h_degree = odd ? label.n : label.n - 1;
               std::string bad;
               if (!c.h.is_zero() && c.h.homogeneous_degree() != h_degree) bad += "h=" + c.h.to_string() + " ";
               if (!c.g.is_zero() && c.g.homogeneous_degree() != label.n) bad += "g=" + c.g.to_string();
               return {bad.empty() ? 0 : 1, bad};
             });
  report.run(id + ".nonzero", "f is nonzero", [&]() -> std::pair<std::size_t, std::string> {
    if (f.is_zero()) return {1, "f = 0"};
    return {0, {}};
  });
  return report;
}

std::vector<EigenLabel> basis_labels(Subspace subspace, int n) {
  if (n < 0) throw InvalidArgument("N must be nonnegative");
  std::vector<EigenLabel> labels;
  for (int k = 0; k <= n; ++k) {
    labels.emplace_back(subspace, Sign::plus, k, n);
    if (subspace == Subspace::odd || k < n) labels.emplace_back(subspace, Sign::minus, k, n);
  }
  return labels;
}

namespace {

using Coordinate = std::tuple<int, int, int>;  // component, u power, v power

void add_coordinates(std::map<Coordinate, ParamScalar>& out, int component,
                     const UVPolynomial& h) {
  for (const auto& [e, c] : h.terms()) out[{component, e.first, e.second}] = c;
}

std::map<Coordinate, ParamScalar> kernel_coordinates(const SuperElement& f) {
  const KernelComponents parts = kernel_decompose(f);
  std::map<Coordinate, ParamScalar> out;
  add_coordinates(out, 0, parts.h1);
  add_coordinates(out, 1, parts.h2);
  add_coordinates(out, 2, parts.g1);
  add_coordinates(out, 3, parts.g2);
  return out;
}

// Rows indexed by the union of coordinates; one column per vector.
ParamMatrix coordinate_matrix(const std::vector<std::map<Coordinate, ParamScalar>>& columns,
                              const std::map<Coordinate, std::size_t>& rows) {
  ParamMatrix m(rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [key, value] : columns[j]) m(rows.at(key), j) = value;
  }
  return m;
}

std::map<Coordinate, std::size_t> row_index(
    std::initializer_list<const std::vector<std::map<Coordinate, ParamScalar>>*> sets) {
  std::map<Coordinate, std::size_t> rows;
  for (const auto* set : sets) {
    for (const auto& column : *set) {
      for (const auto& entry : column) rows.emplace(entry.first, 0);
    }
  }
  std::size_t i = 0;
  for (auto& [key, index] : rows) index = i++;
  return rows;
}

}  // namespace

std::size_t basis_rank(Subspace subspace, int n, const Params& params) {
  std::vector<std::map<Coordinate, ParamScalar>> columns;
  for (const EigenLabel& l : basis_labels(subspace, n)) {
    columns.push_back(kernel_coordinates(build_eigenvector(l, params)));
  }
  return rank(coordinate_matrix(columns, row_index({&columns})));
}

VerificationReport verify_component_formulas(int max_n, const Params& params) {
  VerificationReport report("eigen", params.describe());
  const ParamScalar one(1);
  const ParamScalar two(2);
  const ParamScalar four(4);
  const ParamScalar nu1 = params.nu(1);
  const ParamScalar nu2 = params.nu(2);
  const ParamScalar nu12 = params.nu_sum(12);
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (Sign sign : {Sign::plus, Sign::minus}) {
        const EigenLabel odd(Subspace::odd, sign, k, n);
        const EigenComponents c = eigen_components(odd, params);
        const ParamScalar lambda = intermediate_eigenvalue(odd, params);
        report.run(label_id(odd) + ".g_quotient",
                   "(1 + 2l + 4nu1 - 4nu2) g = (1 + 2l + 4nu12) h + 4u h_u - 4u h_v", [&] {
                     const UVPolynomial rhs = (one + two * lambda + four * nu12) * c.h +
                                              four * (c.h.d_u() - c.h.d_v()).shift(1, 0);
                     return uv_residual((one + two * lambda + four * nu1 - four * nu2) * c.g - rhs);
                   });
        if (sign == Sign::plus) {
          report.run(label_id(odd) + ".h_equation",
                     "(u^2 du^2 - u^2 du dv + (2nu12+1) u du - (2nu1+1) u dv + nu12^2 - "
                     "(2l+1)^2/16) h = 0",
                     [&] {
                       const UVPolynomial& h = c.h;
                       const ParamScalar shift = (two * lambda + one) / four;
                       const UVPolynomial r =
                           (h.d_u().d_u() - h.d_u().d_v()).shift(2, 0) +
                           ((two * nu12 + one) * h.d_u() - (two * nu1 + one) * h.d_v()).shift(1, 0) +
                           (nu12 * nu12 - shift * shift) * h;
                       return uv_residual(r);
                     });
        }
        if (sign == Sign::minus && k == n) continue;
        const EigenLabel even(Subspace::even, sign, k, n);
        const EigenComponents e = eigen_components(even, params);
        const ParamScalar mu = intermediate_eigenvalue(even, params);
        report.run(label_id(even) + ".h_quotient", "4u h = (1 + 2l - 4nu12) g - 4u g_u", [&] {
          const UVPolynomial rhs = (one + two * mu - four * nu12) * e.g - four * e.g.d_u().shift(1, 0);
          return uv_residual(four * e.h.shift(1, 0) - rhs);
        });
        if (sign == Sign::plus) {
          report.run(label_id(even) + ".g_equation",
                     "(u^2 du^2 - u^2 du dv + 2nu12 u du - 2nu1 u dv + nu12(nu12-1) + 1/4 - "
                     "(2l-1)^2/16) g = 0",
                     [&] {
                       const UVPolynomial& g = e.g;
                       const ParamScalar shift = (two * mu - one) / four;
                       const UVPolynomial r =
                           (g.d_u().d_u() - g.d_u().d_v()).shift(2, 0) +
                           (two * nu12 * g.d_u() - two * nu1 * g.d_v()).shift(1, 0) +
                           (nu12 * (nu12 - one) + ParamScalar(Rational(1, 4)) - shift * shift) * g;
                       return uv_residual(r);
                     });
        }
      }
    }
  }
  return report;
}

ParamScalar TridiagonalMatrix::coefficient(const EigenLabel& from, const EigenLabel& to) const {
  std::size_t i = basis.size();
  std::size_t j = basis.size();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (basis[b] == from) i = b;
    if (basis[b] == to) j = b;
  }
  if (i == basis.size() || j == basis.size()) return ParamScalar();
  return entries(i, j);
}

TridiagonalMatrix tridiagonal_matrix(Subspace subspace, int n, const Params& params) {
  TridiagonalMatrix out;
  out.subspace = subspace;
  out.n = n;
  out.basis = basis_labels(subspace, n);
  const OperatorElement q23 = OspRealization::standard(params).casimir(SubsetLabel::parse("23"));
  std::vector<std::map<Coordinate, ParamScalar>> basis_columns;
  std::vector<std::map<Coordinate, ParamScalar>> image_columns;
  for (const EigenLabel& l : out.basis) {
    const SuperElement f = build_eigenvector(l, params);
    basis_columns.push_back(kernel_coordinates(f));
    image_columns.push_back(kernel_coordinates(apply(q23, f)));
  }
  const auto rows = row_index({&basis_columns, &image_columns});
  const ParamMatrix x =
      solve(coordinate_matrix(basis_columns, rows), coordinate_matrix(image_columns, rows));
  out.entries = ParamMatrix(out.basis.size(), out.basis.size());
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    for (std::size_t j = 0; j < out.basis.size(); ++j) out.entries(i, j) = x(j, i);
  }
  return out;
}

namespace {

struct TridiagonalForms {
  ParamScalar nu1, nu2, nu3, nu12, nu123, n;

  ParamScalar q(long v) const { return ParamScalar(v); }
  ParamScalar half() const { return ParamScalar(Rational(1, 2)); }

  // Odd closed forms.
  ParamScalar odd_alpha_plus(int k) const {
    const ParamScalar kk = q(k);
    return (q(2) * nu2 + n - kk) * (q(2) * nu123 + q(2) * n - kk) / (nu12 + n - kk);
  }
  // Value at k is the coefficient of f+_{k-1} in Q23 f-_k.
  ParamScalar odd_alpha_minus(int k) const {
    const ParamScalar kk = q(k);
    return q(2) * (q(2) * nu1 + n - kk + q(1)) * (q(2) * nu12 + n - kk) /
           (q(2) * nu12 + q(2) * n - q(2) * kk + q(1));
  }
  ParamScalar odd_gamma_plus(int k) const {
    const ParamScalar kk = q(k);
    return q(2) * (n - kk) * (kk + q(1)) * (q(2) * nu12 + q(2) * n - kk) /
           ((q(2) * nu1 + n - kk) * (q(2) * nu12 + q(2) * n - q(2) * kk - q(1)));
  }
  ParamScalar odd_gamma_minus(int k) const {
    const ParamScalar kk = q(k);
    return (q(2) * nu3 + kk) * (q(2) * nu1 + n - kk) / (nu12 + n - kk);
  }
  ParamScalar odd_beta(int k, int sign) const {
    const ParamScalar kk = q(k);
    const ParamScalar s = q(sign);
    return s * (nu1 - nu2) * (nu12 + q(2) * nu3 + n) / (nu12 + n - kk) -
           s * (q(2) * nu12 - q(1)) * (q(2) * nu12 + q(2) * n + q(1)) /
               (q(2) * (q(2) * nu12 + q(2) * n - q(2) * kk - s));
  }
  ParamScalar odd_adjacent_product(int k) const {
    const ParamScalar kk = q(k);
    const ParamScalar d = q(2) * nu12 + q(2) * n - q(2) * kk - q(1);
    return q(4) * (kk + q(1)) * (n - kk) * (q(2) * nu12 + q(2) * n - kk) *
           (q(2) * nu12 + n - kk - q(1)) / (d * d);
  }
  ParamScalar odd_same_product(int k) const {
    const ParamScalar kk = q(k);
    const ParamScalar d = nu12 + n - kk;
    return (q(2) * nu1 + n - kk) * (q(2) * nu2 + n - kk) * (q(2) * nu3 + kk) *
           (q(2) * nu123 + q(2) * n - kk) / (d * d);
  }

  // Even closed forms.
  ParamScalar even_alpha_plus(int k) const {
    const ParamScalar kk = q(k);
    return (q(2) * nu1 + n - kk) * (q(2) * nu2 + n - kk) / (nu12 + n - kk);
  }
  ParamScalar even_alpha_minus(int k) const {
    const ParamScalar kk = q(k);
    return q(2) * (q(2) * nu12 + n - kk - q(1)) * (q(2) * nu123 + q(2) * n - kk - q(1)) /
           (q(2) * nu12 + q(2) * n - q(2) * kk - q(1));
  }
  ParamScalar even_gamma_plus(int k) const {
    const ParamScalar kk = q(k);
    return q(2) * (q(2) * nu3 + kk) * (n - kk) / (q(2) * nu12 + q(2) * n - q(2) * kk - q(1));
  }
  ParamScalar even_gamma_minus(int k) const {
    const ParamScalar kk = q(k);
    return kk * (q(2) * nu12 + q(2) * n - kk) / (nu12 + n - kk);
  }
  // The last numerator factor carries 2N - 1. With 2N + 1 the N = 0 value
  // misses the one-dimensional eigenvalue 2nu2 + 2nu3 - 1/2 by 1.
  ParamScalar even_beta(int k, int sign) const {
    const ParamScalar kk = q(k);
    const ParamScalar s = q(sign);
    return -s * (nu1 - nu2) * (nu12 + n) / (nu12 + n - kk) +
           s * (q(2) * nu12 - q(1)) * (q(2) * nu12 + q(4) * nu3 + q(2) * n - q(1)) /
               (q(2) * (q(2) * nu12 + q(2) * n - q(2) * kk - s));
  }
  // Sum of the Q^(23) spectrum on the subspace: the Q^(12) spectrum with nu1 and nu3 swapped.
  ParamScalar trace(bool odd, int count_plus, int count_minus) const {
    const ParamScalar nu23 = nu123 - nu1;
    ParamScalar sum;
    for (int k = 0; k < count_plus; ++k) {
      const ParamScalar gap = n - q(k) + nu23;
      sum += odd ? q(2) * gap - half() : q(2) * (gap - half()) + half();
    }
    for (int k = 0; k < count_minus; ++k) {
      const ParamScalar gap = n - q(k) + nu23;
      sum += odd ? -q(2) * gap - half() : -q(2) * (gap - half()) + half();
    }
    return sum;
  }
  // Product of the mutual pair alpha+_k (f+_k -> f-_{k-1}) and gamma-_k (f-_{k-1} -> f+_k).
  ParamScalar even_adjacent_product(int k) const {
    const ParamScalar kk = q(k);
    const ParamScalar d = nu12 + n - kk;
    return kk * (q(2) * nu1 + n - kk) * (q(2) * nu2 + n - kk) * (q(2) * nu12 + q(2) * n - kk) /
           (d * d);
  }
  ParamScalar even_same_product(int k) const {
    const ParamScalar kk = q(k);
    const ParamScalar d = q(2) * nu12 + q(2) * n - q(2) * kk - q(1);
    return q(4) * (q(2) * nu3 + kk) * (n - kk) * (q(2) * nu12 + n - kk - q(1)) *
           (q(2) * nu123 + q(2) * n - kk - q(1)) / (d * d);
  }
};

struct Expectation {
  EigenLabel target;
  std::string name;
  std::string anchor;
  ParamScalar value;
};

std::pair<std::size_t, std::string> scalar_residual(const ParamScalar& got,
                                                    const ParamScalar& want) {
  if (got == want) return {0, {}};
  return {1, "extracted " + got.to_factor_string() + " expected " + want.to_factor_string()};
}

}  // namespace

VerificationReport verify_tridiagonal(const TridiagonalMatrix& m, const Params& params) {
  VerificationReport report("tridiag", params.describe());
  const TridiagonalForms forms{params.nu(1),        params.nu(2),         params.nu(3),
                               params.nu_sum(12),   params.nu_sum(123),   ParamScalar(static_cast<long>(m.n))};
  const bool odd = m.subspace == Subspace::odd;
  const int n = m.n;
  const std::string prefix = to_string(m.subspace) + ".N" + std::to_string(n);
  auto exists = [&](Sign sign, int k) {
    if (k < 0 || k > n) return false;
    return odd || sign == Sign::plus || k < n;
  };
  for (const EigenLabel& from : m.basis) {
    const int k = from.k;
    const bool plus = from.sign == Sign::plus;
    std::vector<Expectation> expected;
    auto expect = [&](Sign sign, int target_k, std::string name, std::string anchor,
                      ParamScalar value) {
      if (!exists(sign, target_k)) return;
      expected.push_back({EigenLabel(m.subspace, sign, target_k, n), std::move(name),
                          std::move(anchor), std::move(value)});
    };
    if (odd && plus) {
      expect(Sign::minus, k, "alpha_plus", "alpha+_k = (2nu2+N-k)(2nu123+2N-k)/(nu12+N-k)",
             forms.odd_alpha_plus(k));
      expect(Sign::plus, k, "beta_plus",
             "beta+_k = (nu1-nu2)(nu12+2nu3+N)/(nu12+N-k) - "
             "(2nu12-1)(2nu12+2N+1)/(2(2nu12+2N-2k-1))",
             forms.odd_beta(k, 1));
      expect(Sign::minus, k + 1, "gamma_plus",
             "gamma+_k = 2(N-k)(k+1)(2nu12+2N-k)/((2nu1+N-k)(2nu12+2N-2k-1))",
             forms.odd_gamma_plus(k));
    } else if (odd) {
      expect(Sign::plus, k - 1, "alpha_minus",
             "coefficient of f+_{k-1} = 2(2nu1+N-k+1)(2nu12+N-k)/(2nu12+2N-2k+1)",
             forms.odd_alpha_minus(k));
      expect(Sign::minus, k, "beta_minus",
             "beta-_k = -(nu1-nu2)(nu12+2nu3+N)/(nu12+N-k) + "
             "(2nu12-1)(2nu12+2N+1)/(2(2nu12+2N-2k+1))",
             forms.odd_beta(k, -1));
      expect(Sign::plus, k, "gamma_minus", "gamma-_k = (2nu3+k)(2nu1+N-k)/(nu12+N-k)",
             forms.odd_gamma_minus(k));
    } else if (plus) {
      expect(Sign::minus, k - 1, "alpha_plus", "alpha+_k = (2nu1+N-k)(2nu2+N-k)/(nu12+N-k)",
             forms.even_alpha_plus(k));
      expect(Sign::plus, k, "beta_plus",
             "beta+_k = -(nu1-nu2)(nu12+N)/(nu12+N-k) + "
             "(2nu12-1)(2nu12+4nu3+2N-1)/(2(2nu12+2N-2k-1))",
             forms.even_beta(k, 1));
      expect(Sign::minus, k, "gamma_plus", "gamma+_k = 2(2nu3+k)(N-k)/(2nu12+2N-2k-1)",
             forms.even_gamma_plus(k));
    } else {
      expect(Sign::plus, k, "alpha_minus",
             "alpha-_k = 2(2nu12+N-k-1)(2nu123+2N-k-1)/(2nu12+2N-2k-1)",
             forms.even_alpha_minus(k));
      expect(Sign::minus, k, "beta_minus",
             "beta-_{k+1} = (nu1-nu2)(nu12+N)/(nu12+N-k-1) - "
             "(2nu12-1)(2nu12+4nu3+2N-1)/(2(2nu12+2N-2k-1))",
             forms.even_beta(k + 1, -1));
      expect(Sign::plus, k + 1, "gamma_minus", "gamma-_{k+1} = (k+1)(2nu12+2N-k-1)/(nu12+N-k-1)",
             forms.even_gamma_minus(k + 1));
    }
    const std::string from_id = prefix + ".k" + std::to_string(k) + (plus ? ".plus" : ".minus");
    for (const Expectation& e : expected) {
      report.run(from_id + "." + e.name, e.anchor,
                 [&] { return scalar_residual(m.coefficient(from, e.target), e.value); });
    }
    report.run(from_id + ".support", "Q23 f has no coefficients outside its tridiagonal neighbours",
               [&]() -> std::pair<std::size_t, std::string> {
                 std::size_t count = 0;
                 std::string out;
                 for (const EigenLabel& to : m.basis) {
                   bool allowed = false;
                   for (const Expectation& e : expected) allowed = allowed || e.target == to;
                   const ParamScalar c = m.coefficient(from, to);
                   if (allowed || c.is_zero()) continue;
                   ++count;
                   out += "[" + to.to_string() + "] " + c.to_factor_string() + "; ";
                 }
                 return std::pair{count, out};
               });
  }
  report.run(prefix + ".trace", "sum of diagonal coefficients = sum of the Q23 eigenvalues", [&] {
    ParamScalar diagonal;
    for (std::size_t i = 0; i < m.basis.size(); ++i) diagonal += m.entries(i, i);
    return scalar_residual(diagonal, forms.trace(odd, n + 1, odd ? n + 1 : n));
  });
  auto product = [&](const std::string& id, const std::string& anchor, const EigenLabel& a,
                     const EigenLabel& b, const ParamScalar& want) {
    report.run(id, anchor, [&] {
      return scalar_residual(m.coefficient(a, b) * m.coefficient(b, a), want);
    });
  };
  const Subspace s = m.subspace;
  for (int k = 0; k <= n; ++k) {
    const std::string kid = prefix + ".k" + std::to_string(k);
    if (odd) {
      if (k < n) {
        product(kid + ".product_adjacent",
                "alpha-_k gamma+_k = 4(k+1)(N-k)(2nu12+2N-k)(2nu12+N-k-1)/(2nu12+2N-2k-1)^2",
                EigenLabel(s, Sign::plus, k, n), EigenLabel(s, Sign::minus, k + 1, n),
                forms.odd_adjacent_product(k));
      }
      product(kid + ".product_same",
              "alpha+_k gamma-_k = (2nu1+N-k)(2nu2+N-k)(2nu3+k)(2nu123+2N-k)/(nu12+N-k)^2",
              EigenLabel(s, Sign::plus, k, n), EigenLabel(s, Sign::minus, k, n), forms.odd_same_product(k));
    } else {
      if (k >= 1) {
        product(kid + ".product_adjacent",
                "alpha+_k gamma-_k = k(2nu1+N-k)(2nu2+N-k)(2nu12+2N-k)/(nu12+N-k)^2",
                EigenLabel(s, Sign::plus, k, n), EigenLabel(s, Sign::minus, k - 1, n),
                forms.even_adjacent_product(k));
      }
      if (k < n) {
        product(kid + ".product_same",
                "alpha-_k gamma+_k = 4(2nu3+k)(N-k)(2nu12+N-k-1)(2nu123+2N-k-1)/(2nu12+2N-2k-1)^2",
                EigenLabel(s, Sign::plus, k, n), EigenLabel(s, Sign::minus, k, n),
                forms.even_same_product(k));
      }
    }
  }
  return report;
}

}  // namespace superbi
