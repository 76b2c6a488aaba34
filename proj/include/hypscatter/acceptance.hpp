// Copyright 2026 The hypscatter Authors
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

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "hypscatter/expected.hpp"
#include "hypscatter/specfun.hpp"

namespace hs::acceptance {

struct Metric {
  std::string key;
  double value = 0.0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  std::vector<Metric> metrics;
  std::vector<expected::Gate> gates;
};

struct Options {
  specfun::PrecisionProfile precision;  // census precision for criteria 5, 6, 8
  std::filesystem::path expected_path = expected::default_path();
  bool freeze = false;    // store measured constants instead of gating them
  std::vector<int> only;  // criterion ids to run; all when empty
};

struct Report {
  std::vector<CriterionResult> results;
  bool all_pass = false;
  bool froze = false;
};

inline constexpr int kCriterionCount = 12;

/// Runs the criteria in order, calling `on_result` after each one. In freeze
/// mode every gate is measured against itself and the store is rewritten.
Report run(const Options& opts,
           const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3 double-coset coefficients  (0.12 s)  detail"
std::string format_line(const CriterionResult& r);

/// Stable-order JSON document of a report.
std::string report_json(const Report& report, const Options& opts);

}  // namespace hs::acceptance
