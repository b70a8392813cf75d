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

#include "superbi/errors.hpp"
#include "superbi/osp_model.hpp"
#include "superbi/params.hpp"
#include "superbi/report.hpp"
#include "superbi/superspace.hpp"

namespace superbi {

/// The four maps C[u,v] -> V whose images span ker A-^(123):
///   O1(h) = h (t1 - t2) + h_v t1 t2 t3
///   O2(h) = h (t2 - t3) - h_u t1 t2 t3
///   E1(h) = h (t1 t2 - t1 t3 + t2 t3)
///   E2(h) = h + h_u t1 t2 + h_v t2 t3
/// with u = x1 - x2 and v = x2 - x3.
enum class EmbeddingKind { o1, o2, e1, e2 };

std::string to_string(EmbeddingKind kind);

SuperElement embed(EmbeddingKind kind, const UVPolynomial& h);

/// F = O1(h1) + O2(h2) + E1(g1) + E2(g2).
struct KernelComponents {
  UVPolynomial h1;
  UVPolynomial h2;
  UVPolynomial g1;
  UVPolynomial g2;

  SuperElement assemble() const;
  friend bool operator==(const KernelComponents&, const KernelComponents&) = default;
};

/// Thrown when the input is not annihilated by A-^(123).
class NotInKernel : public Error {
 public:
  explicit NotInKernel(SuperElement image)
      : Error("element is not in ker A-^(123); image is " + image.to_string()),
        image_(std::move(image)) {}
  const SuperElement& image() const noexcept { return image_; }

 private:
  SuperElement image_;
};

/// The total lowering operator A-^(123) (parameter free).
const OperatorElement& total_lowering();

/// Recovers the unique components of a kernel element by reading off its
/// theta sectors. Throws NotInKernel, or InvariantViolation if a sector is not
/// a polynomial in u and v.
KernelComponents kernel_decompose(const SuperElement& f);

/// Rewrites a theta-free element that depends on x only through u and v;
/// nullopt otherwise.
std::optional<UVPolynomial> to_uv(const SuperElement& body);

/// Sum of c * u^a v^b * d_u^i d_v^j.
class UVOperator {
 public:
  struct Term {
    ParamScalar coefficient;
    int u_power = 0;
    int v_power = 0;
    int du = 0;
    int dv = 0;
  };

  UVOperator() = default;
  UVOperator(std::initializer_list<Term> terms) : terms_(terms) {}

  const std::vector<Term>& terms() const noexcept { return terms_; }
  UVPolynomial apply(const UVPolynomial& h) const;
  UVOperator operator-() const;

 private:
  std::vector<Term> terms_;
};

/// Q^(S) o K = sum over the right-hand side of K' o D.
struct ActionIdentity {
  std::string id;      // e.g. "Q12.O1"
  std::string anchor;  // the identity in plain notation
  SubsetLabel casimir{3};
  EmbeddingKind source = EmbeddingKind::o1;
  std::vector<std::pair<EmbeddingKind, UVOperator>> rhs;

  SuperElement apply_rhs(const UVPolynomial& h) const;
};

/// The twelve action identities for Q^(12), Q^(13), Q^(23) on O1, O2, E1, E2.
std::vector<ActionIdentity> action_identities(const Params& params);

/// Verifies every identity on all monomials u^a v^b with a + b <= max_degree.
VerificationReport check_action_identities(int max_degree, const Params& params);

}  // namespace superbi
