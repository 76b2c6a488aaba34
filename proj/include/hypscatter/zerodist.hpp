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

#include <string>
#include <vector>

#include "hypscatter/error.hpp"
#include "hypscatter/numeric.hpp"

namespace hs::zerodist {

struct Rectangle {
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;

  void validate() const;  // throws invalid_argument on zero area
  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
};

struct TrackOptions {
  double initial_step = 0.05;  // sample spacing before refinement
  double min_step = 1e-11;     // relative to the edge length
  int max_perturbations = 5;
};

/// Argument tracking failed on one edge (0 bottom, 1 right, 2 top, 3 left).
class PhaseStepError : public Error {
 public:
  PhaseStepError(int edge, const std::string& what)
      : Error(ErrorCode::phase_step, what), edge_(edge) {}
  int edge() const noexcept { return edge_; }

 private:
  int edge_;
};

/// Winding number of f along the counterclockwise boundary of r, i.e. zeros
/// minus poles inside r. Throws PhaseStepError when a boundary point is too
/// close to a zero or pole.
int count_zeros(const ComplexFn& f, const Rectangle& r, const TrackOptions& opts = {});

struct CountResult {
  int count = 0;
  Rectangle rectangle;  // rectangle actually traced
  int perturbations = 0;
};

/// count_zeros, moving an offending edge inward by 1e-4 (1 + |T|) and retrying.
CountResult count_zeros_perturbed(const ComplexFn& f, const Rectangle& r,
                                  const TrackOptions& opts = {});

struct PhaseSample {
  double u = 0.0;  // segment parameter in [0, 1]
  Complex value;
  double phase = 0.0;  // continuous argument of value
};

/// Continuous argument of f along the segment z0 -> z1, starting from the
/// principal argument at z0.
std::vector<PhaseSample> track_phase(const ComplexFn& f, Complex z0, Complex z1,
                                     const TrackOptions& opts = {});

struct ZeroRecord {
  double beta = 0.0;
  double gamma = 0.0;
  int multiplicity = 1;
  Rectangle certified_by;
  std::string precision = "double";
};

/// Zeros of f inside r by recursive subdivision and argument-principle
/// counts, refined by Newton's method with multiplicity to `tol`. Sorted by
/// (gamma, beta).
std::vector<ZeroRecord> locate_zeros(const ComplexFn& f, const Rectangle& r, double tol,
                                     const TrackOptions& opts = {},
                                     const std::string& precision = "double");

/// How a zero list covers the lower half-plane.
enum class Mirror {
  none,       // list is complete in both half-planes
  conjugate,  // list holds gamma >= 0 only; gamma > 0 entries count twice
};

double F1_sum(const std::vector<ZeroRecord>& zeros, double alpha, double T,
              Mirror mirror = Mirror::conjugate);
double F_smoothed_sum(const std::vector<ZeroRecord>& zeros, double alpha, double T,
                      Mirror mirror = Mirror::conjugate);

/// F(T) - F(T-1) <= F1(T) <= F(T+1) - F(T), with slack `tol`.
bool sandwich_check(double F_prev, double F_mid, double F_next, double F1_mid,
                    double tol = 1e-12);

struct RealPole {
  double location = 0.0;
  int order = 1;
};

/// What the zero-distribution formulas need to know about L*.
struct LStarData {
  ComplexFn eval;
  int d = 2;
  int kappa = 1;
  std::vector<RealPole> poles;  // real poles in ((d-1)/2, d]
  double lambda1 = 2.0;         // first frequency above 1 of the L* series
  double coeff1 = 1.0;          // its coefficient
};

struct LittlewoodParts {
  double log_integral = 0.0;  // (1/2pi) int_{-T}^{T} log|L*(alpha+it)| dt
  double arg_integral = 0.0;  // (1/pi) int_alpha^inf arg L*(sigma+iT) dsigma
  double pole_term = 0.0;     // sum over poles sigma_j > alpha of (sigma_j - alpha)
  double sigma_cut = 0.0;
  double quadrature_error = 0.0;
  double total() const { return log_integral + arg_integral + pole_term; }
};

LittlewoodParts littlewood_rhs(const LStarData& lstar, double alpha, double T,
                               double abs_tol = 1e-6);

struct SmoothedConstants {
  double B = 0.0;
  double C = 0.0;
  double B_as_displayed = 0.0;  // original closed form, kept for comparison
};

SmoothedConstants closed_form_constants(int d, int kappa, double a_gamma);

/// kappa (d-1)/(4 pi) T^2 log T + B T^2 + C T.
double smoothed_model(int d, int kappa, double a_gamma, double T);

struct SmoothedIntegral {
  double numeric = 0.0;
  double model = 0.0;
  double error = 0.0;
};

/// (1/2pi) int_{-T}^{T} (T - |t|) log|L*((d-1)/2 + it)| dt and the model.
SmoothedIntegral smoothed_critical_integral(const LStarData& lstar, double a_gamma, double T,
                                            double abs_tol = 1e-6);

/// Coefficient of T in the zero-count expansion, derived from the smoothed
/// integral: 2B + kappa (d-1)/(4 pi).
double main_term_linear_coefficient(int d, int kappa, double a_gamma);

/// -(1/2pi) int_{-T}^{T} (phi'/phi)((d-1)/2 + it) dt, by continuous tracking
/// of arg phi along the critical segment.
double phase_integral(const ComplexFn& phi_det, int d, double T, const TrackOptions& opts = {});

struct MainTermFit {
  double leading = 0.0;  // kappa (d-1) / (2 pi), fixed
  double A = 0.0;        // fitted
  double sup_residual_over_log = 0.0;
  double rms_residual = 0.0;
  std::vector<double> T_grid, F1_values, residuals;
};

/// Least-squares fit of F1((d-1)/2, T) - leading T log T = A T over T_grid.
MainTermFit verify_main_term(const std::vector<ZeroRecord>& zeros, int d, int kappa,
                             const std::vector<double>& T_grid);

struct StripRow {
  double T = 0.0;
  double F1 = 0.0;
  double scale = 0.0;  // T min(log(1/(alpha-alpha0)), log log T)
  double ratio = 0.0;
};

std::vector<StripRow> verify_strip_concentration(const std::vector<ZeroRecord>& zeros, int d,
                                                 double alpha,
                                                 const std::vector<double>& T_grid);

}  // namespace hs::zerodist
