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

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace hs {

using Complex = std::complex<double>;
using RealFn = std::function<double(double)>;
using ComplexFn = std::function<Complex(Complex)>;

inline constexpr double kPi = std::numbers::pi;

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

/// Result of an adaptive quadrature.
struct Quadrature {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod (G7/K15) over [a, b], split at `breaks` (interior
/// points where the integrand may be singular or rough). Throws
/// Error(convergence) if the requested tolerance is not met.
Quadrature integrate(const RealFn& f, double a, double b, double abs_tol,
                     std::span<const double> breaks = {},
                     double panel_width = 2.0);

/// Least squares solution of A x = y (columns of A are basis functions).
/// Throws Error(consistency) if A is numerically rank deficient.
std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  std::span<const double> y);

/// Principal argument of b/a, i.e. the phase increment from a to b.
inline double phase_step(Complex a, Complex b) { return std::arg(b / a); }

}  // namespace hs
