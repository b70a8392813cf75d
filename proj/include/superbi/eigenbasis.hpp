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

#pragma once

#include <string>
#include <vector>

#include "superbi/jacobi.hpp"
#include "superbi/kernel.hpp"
#include "superbi/linear_algebra.hpp"

namespace superbi {

enum class Subspace { odd, even };
enum class Sign { plus, minus };

std::string to_string(Subspace s);
std::string to_string(Sign s);

/// Indices of f^sign_{k,N}. Requires k <= N, and k < N for the even minus family.
struct EigenLabel {
  Subspace subspace = Subspace::odd;
  Sign sign = Sign::plus;
  int k = 0;
  int n = 0;

  EigenLabel() = default;
  EigenLabel(Subspace subspace, Sign sign, int k, int n);

  /// "odd+ k=1 N=3".
  std::string to_string() const;
  friend bool operator==(const EigenLabel&, const EigenLabel&) = default;
};

/// Odd: f = O1(h) + O2(g). Even: f = E1(h) + E2(g).
struct EigenComponents {
  UVPolynomial h;
  UVPolynomial g;
};

EigenComponents eigen_components(const EigenLabel& label, const Params& params);
SuperElement build_eigenvector(const EigenLabel& label, const Params& params);

/// Q^(123) eigenvalue: -(2N + 2nu123 + 1/2) odd, 2N + 2nu123 - 1/2 even.
ParamScalar total_eigenvalue(const EigenLabel& label, const Params& params);
/// Q^(12) eigenvalue: +-2(N - k + nu12) - 1/2 odd, +-2(N - k + nu12 - 1/2) + 1/2 even.
ParamScalar intermediate_eigenvalue(const EigenLabel& label, const Params& params);

/// Q^(123) and Q^(12) eigen-equations plus kernel membership, parity and
/// x-homogeneity of f.
VerificationReport verify_eigenpair(const EigenLabel& label, const Params& params);

/// The labels spanning the subspace at fixed N, ordered by k with plus before minus.
std::vector<EigenLabel> basis_labels(Subspace subspace, int n);

/// Rank of {f^+-_{k,N}} over the fraction field.
std::size_t basis_rank(Subspace subspace, int n, const Params& params);

/// Structural checks on the components for 0 <= k <= N <= max_n: the odd g
/// against the quotient formula, the odd h against its second order
/// equation, and the even h against the quotient formula for g.
VerificationReport verify_component_formulas(int max_n, const Params& params);

/// Expansion of Q^(23) over the basis at fixed N.
struct TridiagonalMatrix {
  Subspace subspace = Subspace::odd;
  int n = 0;
  std::vector<EigenLabel> basis;
  /// entries(i, j): coefficient of basis[j] in Q^(23) basis[i].
  ParamMatrix entries;

  /// Coefficient of `to` in Q^(23) `from`; zero when either label is absent.
  ParamScalar coefficient(const EigenLabel& from, const EigenLabel& to) const;
};

/// Expands Q^(23) f for every basis element by an exact solve on the
/// kernel coordinates. Throws SingularSystem if the basis is degenerate.
TridiagonalMatrix tridiagonal_matrix(Subspace subspace, int n, const Params& params);

/// Support, closed forms, diagonal terms and product constraints.
VerificationReport verify_tridiagonal(const TridiagonalMatrix& m, const Params& params);

}  // namespace superbi
