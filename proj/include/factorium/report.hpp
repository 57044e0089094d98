// Copyright 2026 The Factorium Authors.
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
#include <string>
#include <vector>

namespace factorium {

/// One named check. A failed check always carries a witness describing the
/// offending object; a skipped check passes with the reason in the witness.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;
  bool skipped = false;

  static CheckResult ok(std::string name, std::string witness = "") {
    return CheckResult{std::move(name), true, std::move(witness), false};
  }
  static CheckResult fail(std::string name, std::string witness) {
    return CheckResult{std::move(name), false, std::move(witness), false};
  }
  static CheckResult skip(std::string name, std::string reason) {
    return CheckResult{std::move(name), true, "not-applicable: " + reason, true};
  }
};

struct VerificationReport {
  std::string id;
  std::vector<CheckResult> checks;
  std::int64_t millis = 0;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const CheckResult& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void merge(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace factorium
