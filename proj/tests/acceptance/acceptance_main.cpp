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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "hypscatter/acceptance.hpp"
#include "hypscatter/error.hpp"

int main(int argc, char** argv) {
  hs::acceptance::Options opts;
  opts.expected_path = std::string(HS_DATA_DIR) + "/expected.json";
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--freeze") {
      opts.freeze = true;
    } else if (a == "--precision" && i + 1 < argc) {
      opts.precision = hs::specfun::PrecisionProfile::parse(argv[++i]);
    } else if (a == "--only" && i + 1 < argc) {
      opts.only.push_back(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: acceptance [--freeze] [--precision double|dd] [--only N]...\n");
      return 2;
    }
  }
  try {
    const auto report = hs::acceptance::run(opts, [](const hs::acceptance::CriterionResult& r) {
      std::printf("%s\n", hs::acceptance::format_line(r).c_str());
      std::fflush(stdout);
    });
    std::printf("%s\n", report.all_pass ? "all criteria pass" : "some criteria FAIL");
    return report.all_pass ? 0 : 1;
  } catch (const hs::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
