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

#include "superbi/report.hpp"

#include <algorithm>
#include "json.hpp"
#include <sstream>

#include "superbi/errors.hpp"

namespace superbi {

void VerificationReport::add(CheckResult result) {
  if (find(result.id) != nullptr) throw InvalidArgument("duplicate check id " + result.id);
  if (result.status == CheckStatus::fail && result.residual.empty()) {
    throw InvalidArgument("failed check " + result.id + " has no residual summary");
  }
  checks_.push_back(std::move(result));
}

void VerificationReport::run(const std::string& id, const std::string& anchor,
                             const std::function<std::pair<std::size_t, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.id = id;
  r.anchor = anchor;
  try {
    auto [terms, residual] = body();
    r.residual_terms = terms;
    if (terms != 0) {
      r.status = CheckStatus::fail;
      r.residual = residual.empty() ? "nonzero residual" : summarize_residual(residual);
    }
  } catch (const std::exception& e) {
    r.status = CheckStatus::fail;
    r.residual_terms = 0;
    r.residual = std::string("error: ") + e.what();
  }
  r.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  add(std::move(r));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) add(c);
}

void VerificationReport::merge_prefixed(const VerificationReport& other) {
  for (auto c : other.checks_) {
    c.id = other.suite_ + "/" + c.id;
    add(std::move(c));
  }
}

bool VerificationReport::all_passed() const noexcept { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) {
    return c.status == CheckStatus::fail;
  }));
}

const CheckResult* VerificationReport::find(const std::string& id) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const auto& c) { return c.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

void VerificationReport::sort() {
  std::stable_sort(checks_.begin(), checks_.end(),
                   [](const auto& a, const auto& b) { return a.id < b.id; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite_ << " (" << mode_ << ")\n";
  for (const auto& c : checks_) {
    os << (c.status == CheckStatus::pass ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << "]  "
       << c.micros << "us";
    if (c.status == CheckStatus::fail) {
      os << "\n     residual (" << c.residual_terms << " terms): " << c.residual;
    }
    os << "\n";
  }
  os << checks_.size() - failure_count() << "/" << checks_.size() << " checks passed\n";
  return os.str();
}

std::string VerificationReport::to_json_lines() const {
  std::string out;
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["check_id"] = c.id;
    j["anchor"] = c.anchor;
    j["status"] = c.status == CheckStatus::pass ? "pass" : "fail";
    j["residual_terms"] = c.residual_terms;
    j["micros"] = c.micros;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string summarize_residual(const std::string& rendering, std::size_t limit) {
  if (rendering.size() <= limit) return rendering;
  return rendering.substr(0, limit) + " ...";
}

}  // namespace superbi
