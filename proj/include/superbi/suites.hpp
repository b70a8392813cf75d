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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "superbi/params.hpp"
#include "superbi/report.hpp"
#include "superbi/superweyl.hpp"

namespace superbi {

struct SuiteOptions {
  int max_degree = 8;                 // actions suite, 2..12
  std::optional<int> max_n;           // eigen (default 6), tridiag (5), jacobi (6); 0..8
  std::optional<ParamPoint> params;   // symbolic when absent
  std::uint64_t seed = 20240229;
  int kernel_samples = 50;            // random quadruples in the kernel suite
  int oracle_pairs = 200;             // random operator pairs in the oracle suite
  unsigned threads = 0;               // 0 picks the hardware concurrency
};

/// osp, bannai-ito, kernel, actions, eigen, tridiag, jacobi, oracle,
/// evaluation, all.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite or an out-of-range option.
/// Mathematical failures are report entries. Checks are sorted by id.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

/// Random operator with a few normal words of small degree; coefficients
/// involve the parameters when symbolic.
OperatorElement random_operator(std::mt19937_64& rng, const Params& params);
/// Random element with x-degree <= 4.
SuperElement random_element(std::mt19937_64& rng, const Params& params);
/// Random polynomial in u, v of total degree <= max_degree.
UVPolynomial random_uv(std::mt19937_64& rng, const Params& params, int max_degree);

/// apply(a * b, f) == apply(a, apply(b, f)) for `pairs` random triples.
VerificationReport check_compose_apply(int pairs, std::uint64_t seed, const Params& params);

/// Evaluates symbolic results at the point and compares them with the same
/// objects computed with the parameters bound from the start: every Casimir,
/// the eigenbasis components and the Q^(23) matrices for N <= max_n.
VerificationReport check_evaluation_agreement(const ParamPoint& point, int max_n);

/// A point off every degeneracy locus up to max_n, drawn from the seed.
ParamPoint generic_point(std::uint64_t seed, int max_n);

}  // namespace superbi
