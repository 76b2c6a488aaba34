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

#include <stdexcept>
#include <string>

namespace hs {

/// Error categories shared by the C++ core and the C API (see hypscatter.h).
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  domain = 2,        // evaluation outside a validity region or at a pole
  budget = 3,        // enumeration budget exceeded
  convergence = 4,   // quadrature / refinement did not converge
  phase_step = 5,    // argument tracking failed (boundary too close to a zero)
  consistency = 6,   // two independent routes disagree (e.g. zero counts)
  io = 7,
  internal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace hs
