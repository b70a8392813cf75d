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

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace superbi {

enum class CheckStatus { pass, fail };

struct CheckResult {
  std::string id;
  std::string anchor;  // the identity being checked, in plain notation
  CheckStatus status = CheckStatus::pass;
  std::size_t residual_terms = 0;
  std::string residual;  // nonempty whenever status == fail
  std::int64_t micros = 0;
};

/// Pass/fail record of a verification suite. Check ids are unique.
class VerificationReport {
 public:
  VerificationReport(std::string suite, std::string parameter_mode)
      : suite_(std::move(suite)), mode_(std::move(parameter_mode)) {}

  const std::string& suite() const noexcept { return suite_; }
  const std::string& parameter_mode() const noexcept { return mode_; }
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }

  /// Throws InvalidArgument on a duplicate id or a failure without residual.
  void add(CheckResult result);
  /// Times `body`, which returns the residual term count and a rendering of
  /// the residual (count 0 means pass).
  void run(const std::string& id, const std::string& anchor,
           const std::function<std::pair<std::size_t, std::string>()>& body);
  void merge(const VerificationReport& other);
  /// Merges with ids rewritten as "<other suite>/<id>".
  void merge_prefixed(const VerificationReport& other);

  bool all_passed() const noexcept;
  std::size_t failure_count() const noexcept;
  const CheckResult* find(const std::string& id) const;
  /// Orders checks by id.
  void sort();

  std::string to_text() const;
  /// One JSON object per line with fields suite, check_id, anchor, status,
  /// residual_terms, micros.
  std::string to_json_lines() const;

 private:
  std::string suite_;
  std::string mode_;
  std::vector<CheckResult> checks_;
};

/// Shortens a residual rendering for reports.
std::string summarize_residual(const std::string& rendering, std::size_t limit = 240);

}  // namespace superbi
