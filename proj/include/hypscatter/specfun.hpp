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
#include <string>
#include <vector>

#include "hypscatter/numeric.hpp"

namespace hs::specfun {

enum class WorkingPrecision { standard_double, double_double };

/// Controls Euler-Maclaurin evaluation. In double_double mode the main sums
/// are accumulated with TwoSum compensation and the direct-sum cutoff is
/// doubled; the default is plain double.
struct PrecisionProfile {
  WorkingPrecision working_precision = WorkingPrecision::standard_double;
  int euler_maclaurin_terms = 12;  // number of Bernoulli correction terms
  int series_cutoff = 10;          // minimum length of the direct sum

  void validate() const;
  std::string tag() const;  // "double" or "dd"
  static PrecisionProfile parse(const std::string& name);
};

/// Lanczos approximation (g = 7, 9 terms) with reflection for Re s < 1/2.
Complex gamma(Complex s);

/// Continuous branch of log Gamma for Re s > 0 (Stirling series after an
/// upward shift). Agrees with log(gamma(s)) modulo 2*pi*i.
Complex log_gamma(Complex s);

/// Gamma(s - shift) / Gamma(s).
Complex gamma_ratio(Complex s, double shift);

Complex hurwitz_zeta(Complex s, double a, const PrecisionProfile& prof = {});
Complex riemann_zeta(Complex s, const PrecisionProfile& prof = {});

/// L(s, chi_{-4}); entire.
Complex dirichlet_L_chi4(Complex s, const PrecisionProfile& prof = {});

/// zeta_{Q(i)}(s) = zeta(s) L(s, chi_{-4}); simple pole at s = 1.
Complex dedekind_zeta_Qi(Complex s, const PrecisionProfile& prof = {});

/// Riemann-Siegel theta function arg Gamma(1/4 + it/2) - (t/2) log pi.
double hardy_theta(double t);

/// exp(i theta(t)) zeta(1/2 + it), returned complex so that the (vanishing)
/// imaginary part can be inspected.
Complex hardy_Z_complex(double t, const PrecisionProfile& prof = {});
double hardy_Z(double t, const PrecisionProfile& prof = {});

struct ZetaZero {
  double ordinate = 0.0;
  double refinement_error = 0.0;
};

struct ZetaCensus {
  std::vector<ZetaZero> zeros;  // 0 < ordinate <= T, ascending
  int argument_principle_count = 0;
  double scan_step = 0.0;
};

/// Zeros of zeta on the critical line with 0 < gamma <= T (T <= 200), found
/// by Hardy Z sign changes, refined by bracketing to 1e-10 and cross-checked
/// against the argument-principle count of zeta on [-1,2] x [1, T].
/// Throws Error(consistency) if the two counts never agree.
ZetaCensus zeta_zeros_up_to(double T, const PrecisionProfile& prof = {});

/// Same as zeta_zeros_up_to, reading/writing `dir`/zeta_zeros_T<T>_<prec>.csv.
/// An unreadable or inconsistent cache file is ignored and rewritten.
std::vector<ZetaZero> zeta_zeros_cached(double T, const PrecisionProfile& prof,
                                        const std::filesystem::path& dir);

std::filesystem::path zeta_cache_path(double T, const PrecisionProfile& prof,
                                      const std::filesystem::path& dir);

}  // namespace hs::specfun
