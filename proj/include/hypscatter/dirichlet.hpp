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

#include <cstddef>
#include <filesystem>
#include <limits>
#include <vector>

#include "hypscatter/lattices.hpp"
#include "hypscatter/numeric.hpp"

namespace hs::dirichlet {

struct RealPole {
  double location = 0.0;  // in (0, 1)
  int degree = 0;         // degree of the polynomial in log x it contributes
};

/// f(s) = sum a_n lambda_n^{-s} with positive a_n and increasing lambda_n,
/// normalized to abscissa of absolute convergence 1.
struct PositiveDirichletSeries {
  std::vector<double> lambdas;
  std::vector<double> coefficients;
  double residue_at_1 = 0.0;
  std::vector<RealPole> real_poles;
  double growth_exponent = 0.5;  // r in |f(sigma + it)| = O(|t|^r)
  bool complete = false;         // true if the stored terms are the whole series

  void validate() const;
  std::size_t size() const { return lambdas.size(); }
};

struct SeriesValue {
  Complex value;
  double tail_bound = 0.0;  // bound on the omitted terms
  bool within_tolerance = true;
};

/// Sum of the first `cutoff` terms (all if 0) with a bound on the remainder
/// K Lambda^{1-sigma} (1 + |s|/(sigma-1)), K >= sup A(x)/x. Requires
/// Re s > 1 + 1e-9; `within_tolerance` is false if the bound exceeds
/// `tail_tolerance`.
SeriesValue evaluate(const PositiveDirichletSeries& f, Complex s, std::size_t cutoff = 0,
                     double tail_tolerance = std::numeric_limits<double>::infinity());

/// A_f(x) = sum_{lambda_n <= x} a_n.
double summatory(const PositiveDirichletSeries& f, double x);

/// A_f at every point of an ascending grid in one pass.
std::vector<double> summatory_at(const PositiveDirichletSeries& f, const std::vector<double>& xs);

/// sup over the stored terms of A_f(x)/x, together with the residue.
double summatory_ratio_bound(const PositiveDirichletSeries& f);

struct AsymptoticFit {
  double residue = 0.0;
  std::vector<double> pole_coefficients;  // per pole, per power of log x
  double max_deviation = 0.0;  // sup |A - model| / (x^{1-1/(2r)} log x)
};

AsymptoticFit summatory_asymptotic_fit(const PositiveDirichletSeries& f,
                                       const std::vector<double>& x_grid);

struct TruncationWindow {
  double x = 1.0;
  int k = 1;

  void validate() const;  // x >= 1, k >= 0
  bool bound_applies(double r) const { return k > r; }
};

/// sum_{lambda_n <= x} a_n (1 - lambda_n/x)^k lambda_n^{-s}.
Complex smoothed_truncation(const PositiveDirichletSeries& f, const TruncationWindow& w,
                            Complex s);

enum class Sigma1Rule {
  standard,  // (4r - 1) / (4r)
  three_quarters,  // 3/4 when r < 1, standard otherwise
};

double sigma1(double r, Sigma1Rule rule = Sigma1Rule::standard);

/// Mean of |f(sigma + it)|^2 over t in [1, T].
Quadrature mean_square(const ComplexFn& f, double sigma, double T, double sigma_1,
                       double abs_tol = 1e-7);

/// a_n = 1, lambda_n = n.
PositiveDirichletSeries zeta_series(std::size_t n);

/// a_n = phi(n)/n, lambda_n = n: the normalized SL2(Z) scattering series
/// zeta(s)/zeta(s+1).
PositiveDirichletSeries scaled_modular_series(std::size_t n);

/// Normalized series of a double-coset spectrum in dimension d:
/// lambda' = lambda^{(d-1)/2}, a' = count / lambda'.
PositiveDirichletSeries normalized_from_spectrum(const lattices::DoubleCosetSpectrum& spec, int d,
                                                 double residue);

/// CSV "lambda,coefficient" plus a JSON sidecar (<path>.json) with the
/// residue, poles and growth exponent.
void save_series(const PositiveDirichletSeries& f, const std::filesystem::path& csv_path);
PositiveDirichletSeries load_series(const std::filesystem::path& csv_path);

/// Euler totients 0..n by sieve.
std::vector<std::int64_t> totients(std::size_t n);

}  // namespace hs::dirichlet
