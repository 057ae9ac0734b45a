// Copyright 2026 The Authors.
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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgx/closure.hpp"

namespace cgx {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view check_status_name(CheckStatus s);  // "pass", "fail", "skipped"

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  // Compared values: the first failure, otherwise the last evaluated pair.
  std::string lhs;
  std::string rhs;
  std::string detail;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string subject;
  std::size_t geometries = 0;
  std::vector<CheckResult> checks;  // sorted by name

  bool passed() const;
  std::string to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  int reciprocity_max_m = 4;
  int oracle_max_m = 3;
  bool force = false;
};

VerificationReport verify_geometries(std::span<const ClosureOperator> input,
                                     std::string subject,
                                     const VerifyOptions& options = {});
// Every labeled convex geometry on 0..max_n elements.
VerificationReport verify_corpus(int max_n, const VerifyOptions& options = {});

}  // namespace cgx
