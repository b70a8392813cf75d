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

#include <array>
#include <string>
#include <vector>

#include "superbi/params.hpp"
#include "superbi/report.hpp"
#include "superbi/superweyl.hpp"

namespace superbi {

enum class GeneratorKind { a_minus, a_zero, a_plus, parity };

/// Which of the three osp(1|2) copies; always 1, 2 or 3.
class CopyIndex {
 public:
  explicit CopyIndex(int j);
  int value() const noexcept { return j_; }

 private:
  int j_;
};

/// Nonempty subset of {1, 2, 3}.
class SubsetLabel {
 public:
  /// Bit j-1 set for each member j. Throws InvalidArgument for empty or out of range.
  explicit SubsetLabel(unsigned mask);
  /// From a digit string such as "12" or "123"; rejects repeats and digits
  /// outside 1..3.
  static SubsetLabel parse(const std::string& digits);

  unsigned mask() const noexcept { return mask_; }
  bool contains(int j) const noexcept { return (mask_ >> (j - 1)) & 1u; }
  bool is_subset_of(const SubsetLabel& other) const noexcept {
    return (mask_ & other.mask_) == mask_;
  }
  std::vector<int> members() const;
  std::string to_string() const;  // "12"
  friend bool operator==(const SubsetLabel&, const SubsetLabel&) = default;

  static std::vector<SubsetLabel> all();

 private:
  unsigned mask_;
};

OperatorElement build_generator(GeneratorKind kind, CopyIndex j, const Params& params);
/// Sum over S for the A kinds, normal-ordered product for the parity kind.
OperatorElement build_aggregate(GeneratorKind kind, const SubsetLabel& s, const Params& params);
/// (A0^S - 2 A+^S A-^S - 1/2) P^S, fully normal ordered.
OperatorElement casimir(const SubsetLabel& s, const Params& params);

/// The three copies of the generators. Tests may replace individual entries
/// to confirm that the relation checks detect a broken realization.
struct OspRealization {
  Params params = Params::symbolic();
  std::array<OperatorElement, 3> a_minus;
  std::array<OperatorElement, 3> a_zero;
  std::array<OperatorElement, 3> a_plus;
  std::array<OperatorElement, 3> parity;

  static OspRealization standard(const Params& params);

  const OperatorElement& generator(GeneratorKind kind, int j) const;
  OperatorElement aggregate(GeneratorKind kind, const SubsetLabel& s) const;
  OperatorElement casimir(const SubsetLabel& s) const;
};

/// Single-copy osp(1|2) relations (8 checks per copy) and the cross-copy
/// (anti)commutation relations (4 checks per pair).
VerificationReport check_fundamental_relations(const OspRealization& realization);
VerificationReport check_fundamental_relations(const Params& params);
/// [Q^S, X^T] = 0 for every S subset of T and X in {A0, A+, A-, P}.
VerificationReport check_centrality(const Params& params);
/// The three anticommutator relations and the sum-of-squares identity.
VerificationReport check_bannai_ito(const Params& params);

/// Residual count and rendering of an operator that should vanish.
std::pair<std::size_t, std::string> operator_residual(const OperatorElement& residual);

}  // namespace superbi
