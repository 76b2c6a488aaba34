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
#include <vector>

#include "hypscatter/scattering.hpp"
#include "hypscatter/specfun.hpp"
#include "hypscatter/zerodist.hpp"

namespace hs::census {

/// Zeros of L* with beta > (d-1)/2 + margin and 1 <= gamma <= T.
struct Census {
  std::vector<zerodist::ZeroRecord> zeros;  // gamma >= 0 half; mirror by conjugation
  zerodist::Rectangle rectangle;            // rectangle actually traced
  int rectangle_count = 0;                  // argument-principle count on it
  int real_axis_count = 0;                  // zeros minus poles on the box around [0, 1) heights
  int real_axis_expected = 0;               // minus the pole orders there
  double margin = 0.02;
};

/// Throws Error(budget) for T > 100.
Census lstar_census(const scattering::ScatteringModel& m, double T, double tol = 1e-9);

/// Total multiplicity of a zero list.
int total_multiplicity(const std::vector<zerodist::ZeroRecord>& zeros);

/// Zeros of L* predicted from zeta zeros (ordinates up to 2T): (1 + rho)/2
/// with multiplicity kappa, plus 1 + i pi k / log p for Gamma0(p).
/// Throws invalid_argument for the Gaussian lattice.
std::vector<zerodist::ZeroRecord> oracle_zeros(const scattering::ScatteringModel& m, double T,
                                               const std::vector<specfun::ZetaZero>& zeta_zeros);

struct MatchResult {
  bool counts_match = false;   // same total multiplicity
  double max_distance = 0.0;   // over matched pairs
  int unmatched = 0;
};

/// Pairs each located zero with the nearest oracle zero of equal multiplicity.
MatchResult match_zeros(const std::vector<zerodist::ZeroRecord>& located,
                        const std::vector<zerodist::ZeroRecord>& oracle, double tol);

}  // namespace hs::census
