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

#include "hypscatter/census.hpp"

#include <algorithm>
#include <cmath>

#include "hypscatter/error.hpp"

namespace hs::census {

using zerodist::Rectangle;
using zerodist::ZeroRecord;

Census lstar_census(const scattering::ScatteringModel& m, double T, double tol) {
  require(T <= 100.0, ErrorCode::budget, "lstar_census: T above 100");
  require(T >= 1.0, ErrorCode::invalid_argument, "lstar_census: T must be >= 1");
  const auto data = scattering::lstar_data(m);
  Census out;
  const double left = 0.5 * (m.d - 1) + out.margin, right = m.d + 0.5;
  {
    const Rectangle box{left, right, -1.0, 1.0};
    out.real_axis_count = zerodist::count_zeros_perturbed(data.eval, box).count;
    for (const auto& p : data.poles)
      if (p.location > left && p.location < right) out.real_axis_expected -= p.order;
  }
  if (T <= 1.0 + 1e-12) {
    out.rectangle = {left, right, 1.0, 1.0};
    return out;
  }
  const Rectangle r{left, right, 1.0, T};
  const auto top = zerodist::count_zeros_perturbed(data.eval, r);
  out.rectangle = top.rectangle;
  out.rectangle_count = top.count;
  out.zeros = zerodist::locate_zeros(data.eval, top.rectangle, tol, {}, m.precision.tag());
  return out;
}

int total_multiplicity(const std::vector<ZeroRecord>& zeros) {
  int n = 0;
  for (const auto& z : zeros) n += z.multiplicity;
  return n;
}

std::vector<ZeroRecord> oracle_zeros(const scattering::ScatteringModel& m, double T,
                                     const std::vector<specfun::ZetaZero>& zeta_zeros) {
  require(m.lattice.kind != lattices::LatticeKind::gaussian, ErrorCode::invalid_argument,
          "oracle_zeros: no zeta-zero oracle for the Gaussian lattice");
  std::vector<ZeroRecord> out;
  for (const auto& z : zeta_zeros) {
    const double g = 0.5 * z.ordinate;
    if (g >= 1.0 && g <= T) out.push_back({0.75, g, m.kappa, {}, "oracle"});
  }
  if (m.lattice.kind == lattices::LatticeKind::gamma0) {
    const double step = kPi / std::log(static_cast<double>(m.lattice.p));
    for (int k = 1; k * step <= T; ++k) out.push_back({1.0, k * step, 1, {}, "oracle"});
  }
  std::sort(out.begin(), out.end(),
            [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma < b.gamma; });
  return out;
}

MatchResult match_zeros(const std::vector<ZeroRecord>& located,
                        const std::vector<ZeroRecord>& oracle, double tol) {
  MatchResult out;
  out.counts_match = total_multiplicity(located) == total_multiplicity(oracle);
  std::vector<bool> used(oracle.size(), false);
  for (const auto& z : located) {
    double best = INFINITY;
    std::size_t arg = oracle.size();
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      if (used[i] || oracle[i].multiplicity != z.multiplicity) continue;
      const double dist = std::hypot(z.beta - oracle[i].beta, z.gamma - oracle[i].gamma);
      if (dist < best) {
        best = dist;
        arg = i;
      }
    }
    if (arg == oracle.size() || best > tol) {
      ++out.unmatched;
      continue;
    }
    used[arg] = true;
    out.max_distance = std::max(out.max_distance, best);
  }
  out.unmatched += static_cast<int>(std::count(used.begin(), used.end(), false));
  return out;
}

}  // namespace hs::census
