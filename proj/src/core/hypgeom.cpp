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

#include "hypscatter/hypgeom.hpp"

#include <cmath>

#include "hypscatter/error.hpp"

namespace hs::hypgeom {

Eigen::MatrixXd lorentz_form(int d) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Identity(d + 1, d + 1);
  J(d, d) = -1.0;
  return J;
}

bool lorentz_check(const Eigen::MatrixXd& A, int d, double tol) {
  require(d >= 2, ErrorCode::invalid_argument, "lorentz_check: d must be >= 2");
  require(A.rows() == d + 1 && A.cols() == d + 1, ErrorCode::invalid_argument,
          "lorentz_check: matrix is not (d+1)x(d+1)");
  const Eigen::MatrixXd J = lorentz_form(d);
  const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
  const double scale = std::max(1.0, norm * norm);
  const double defect = (A.transpose() * J * A - J).cwiseAbs().rowwise().sum().maxCoeff();
  if (!(defect < tol * scale)) return false;
  if (!(A(d, d) > 0.0)) return false;
  return std::abs(A.determinant() - 1.0) < tol * std::pow(std::max(1.0, norm), d + 1);
}

IsometryMatrix::IsometryMatrix(Eigen::MatrixXd A) : a_(std::move(A)) {
  require(a_.rows() == a_.cols() && a_.rows() >= 3, ErrorCode::invalid_argument,
          "IsometryMatrix: need a square matrix of size >= 3");
  require(lorentz_check(a_, dimension()), ErrorCode::invalid_argument,
          "IsometryMatrix: matrix does not preserve the Lorentz form and upper sheet");
}

IsometryMatrix IsometryMatrix::identity(int d) {
  return IsometryMatrix(Eigen::MatrixXd::Identity(d + 1, d + 1), Trusted{});
}

IsometryMatrix IsometryMatrix::operator*(const IsometryMatrix& other) const {
  require(dimension() == other.dimension(), ErrorCode::invalid_argument,
          "IsometryMatrix: dimension mismatch in product");
  return IsometryMatrix(a_ * other.a_, Trusted{});
}

IsometryMatrix IsometryMatrix::inverse() const {
  const Eigen::MatrixXd J = lorentz_form(dimension());
  return IsometryMatrix(J * a_.transpose() * J, Trusted{});
}

UpperHalfSpacePoint iota(const Eigen::VectorXd& xi, double tol) {
  const int d = static_cast<int>(xi.size()) - 1;
  require(d >= 2, ErrorCode::invalid_argument, "iota: need a vector of length >= 3");
  const double form = xi.head(d).squaredNorm() - xi(d) * xi(d);
  require(std::abs(form + 1.0) < tol * (1.0 + xi(d) * xi(d)) && xi(d) > 0.0,
          ErrorCode::invalid_argument, "iota: point is not on the upper hyperboloid sheet");
  const double s = xi(0) + xi(d);
  UpperHalfSpacePoint z;
  z.x = 2.0 * xi.segment(1, d - 1) / s;
  z.y = 2.0 / s;
  return z;
}

Eigen::VectorXd iota_inv(const UpperHalfSpacePoint& z) {
  require(z.y > 0.0, ErrorCode::invalid_argument, "iota_inv: height must be positive");
  const int d = z.dimension();
  const double q = z.y * z.y + z.x.squaredNorm();
  Eigen::VectorXd xi(d + 1);
  xi(0) = (1.0 - q / 4.0) / z.y;
  xi.segment(1, d - 1) = z.x / z.y;
  xi(d) = (1.0 + q / 4.0) / z.y;
  return xi;
}

ActionParams action_params(const IsometryMatrix& A) {
  const int d = A.dimension();
  const Eigen::MatrixXd& a = A.matrix();
  const Eigen::VectorXd alpha = (a.row(0) + a.row(d)).transpose();
  const double gap = alpha(d) - alpha(0);
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  const double scale = 1.0 + norm;
  ActionParams out;
  if (std::abs(gap) < 1e-12 * scale) {
    const double inner = alpha.segment(1, d - 1).cwiseAbs().maxCoeff();
    require(inner < kLorentzTol * scale, ErrorCode::consistency,
            "action_params: degenerate case with nonzero horizontal coefficients");
    out.lambda = 0.0;
    out.alpha = 0.5 * (alpha(0) + alpha(d));
    return out;
  }
  const double lhs = (alpha(d) + alpha(0)) * gap;
  const double rhs = alpha.segment(1, d - 1).squaredNorm();
  require(std::abs(lhs - rhs) < kLorentzTol * scale * scale, ErrorCode::consistency,
          "action_params: quadratic identity violated (non-Lorentz input)");
  out.lambda = gap / 8.0;
  out.eta = Eigen::VectorXd(2.0 * alpha.segment(1, d - 1) / gap);
  return out;
}

UpperHalfSpacePoint apply_isometry(const IsometryMatrix& A, const UpperHalfSpacePoint& z) {
  require(A.dimension() == z.dimension(), ErrorCode::invalid_argument,
          "apply_isometry: dimension mismatch");
  const Eigen::VectorXd xi = A.matrix() * iota_inv(z);
  return iota(xi, 1e-6);
}

double hyperbolic_distance(const UpperHalfSpacePoint& a, const UpperHalfSpacePoint& b) {
  require(a.dimension() == b.dimension(), ErrorCode::invalid_argument,
          "hyperbolic_distance: dimension mismatch");
  require(a.y > 0.0 && b.y > 0.0, ErrorCode::invalid_argument,
          "hyperbolic_distance: heights must be positive");
  const double dy = a.y - b.y;
  const double sq = (a.x - b.x).squaredNorm() + dy * dy;
  return std::acosh(1.0 + sq / (2.0 * a.y * b.y));
}

}  // namespace hs::hypgeom
