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

#include <Eigen/Dense>
#include <optional>

namespace hs::hypgeom {

inline constexpr double kLorentzTol = 1e-9;

/// J = diag(1, ..., 1, -1) of size d + 1.
Eigen::MatrixXd lorentz_form(int d);

/// True iff A is (d+1)x(d+1), A^T J A = J and det A = 1 within a tolerance
/// scaled by |A|^2, and A preserves the upper sheet (a_dd > 0). Throws
/// invalid_argument on a dimension mismatch.
bool lorentz_check(const Eigen::MatrixXd& A, int d, double tol = kLorentzTol);

/// Element of SO^+(d, 1) acting on hyperbolic d-space.
class IsometryMatrix {
 public:
  /// Throws invalid_argument unless lorentz_check passes.
  explicit IsometryMatrix(Eigen::MatrixXd A);
  static IsometryMatrix identity(int d);

  int dimension() const { return static_cast<int>(a_.rows()) - 1; }
  const Eigen::MatrixXd& matrix() const { return a_; }
  double operator()(int i, int j) const { return a_(i, j); }

  IsometryMatrix operator*(const IsometryMatrix& other) const;
  IsometryMatrix inverse() const;  // J A^T J

 private:
  struct Trusted {};
  IsometryMatrix(Eigen::MatrixXd A, Trusted) : a_(std::move(A)) {}
  Eigen::MatrixXd a_;
};

/// z = (x, y) with x in R^{d-1} and y > 0.
struct UpperHalfSpacePoint {
  Eigen::VectorXd x;
  double y = 1.0;

  int dimension() const { return static_cast<int>(x.size()) + 1; }
};

/// Hyperboloid (upper sheet of xi_0^2 + ... + xi_{d-1}^2 - xi_d^2 = -1) to
/// upper half-space. Throws invalid_argument if xi is not on the sheet.
UpperHalfSpacePoint iota(const Eigen::VectorXd& xi, double tol = kLorentzTol);
Eigen::VectorXd iota_inv(const UpperHalfSpacePoint& z);

/// y(z) / y(A.z) = lambda (y^2 + |x + eta|^2) when lambda > 0, else alpha.
struct ActionParams {
  double lambda = 0.0;
  std::optional<Eigen::VectorXd> eta;
  std::optional<double> alpha;
};

/// Throws consistency if the quadratic identity tying the alpha_j together
/// fails, which only happens for non-Lorentz input.
ActionParams action_params(const IsometryMatrix& A);

UpperHalfSpacePoint apply_isometry(const IsometryMatrix& A, const UpperHalfSpacePoint& z);

double hyperbolic_distance(const UpperHalfSpacePoint& a, const UpperHalfSpacePoint& b);

}  // namespace hs::hypgeom
