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

#include <doctest.h>

#include <complex>
#include <random>

#include "hypscatter/error.hpp"
#include "hypscatter/hypgeom.hpp"
#include "hypscatter/lattices.hpp"

using namespace hs;
using hypgeom::IsometryMatrix;
using hypgeom::UpperHalfSpacePoint;

namespace {

UpperHalfSpacePoint point2(double x, double y) {
  UpperHalfSpacePoint z;
  z.x = Eigen::VectorXd::Constant(1, x);
  z.y = y;
  return z;
}

UpperHalfSpacePoint point3(double x1, double x2, double y) {
  UpperHalfSpacePoint z;
  z.x = Eigen::Vector2d(x1, x2);
  z.y = y;
  return z;
}

// Mobius action on the upper half-plane.
std::complex<double> mobius(const Eigen::Matrix2d& m, std::complex<double> z) {
  return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

Eigen::Matrix2d random_sl2r(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    const double a = u(rng), b = u(rng), c = u(rng);
    if (std::abs(a) < 0.2) continue;
    Eigen::Matrix2d m;
    m << a, b, c, (1.0 + b * c) / a;
    return m;
  }
}

}  // namespace

TEST_CASE("lorentz_check") {
  CHECK(hypgeom::lorentz_check(Eigen::MatrixXd::Identity(3, 3), 2));
  Eigen::MatrixXd lower = Eigen::MatrixXd::Identity(3, 3);
  lower(2, 2) = -1.0;
  CHECK_FALSE(hypgeom::lorentz_check(lower, 2));
  Eigen::Matrix2d t;
  t << 1, 1, 0, 1;
  CHECK(hypgeom::lorentz_check(lattices::embed_sl2r(t).matrix(), 2));
  CHECK_THROWS_AS(hypgeom::lorentz_check(Eigen::MatrixXd::Identity(4, 4), 2), Error);
}

TEST_CASE("iota round trip") {
  const Eigen::VectorXd xi = hypgeom::iota_inv(point2(0.0, 2.0));
  CHECK(xi(0) == doctest::Approx(0.0));
  CHECK(xi(1) == doctest::Approx(0.0));
  CHECK(xi(2) == doctest::Approx(1.0));
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0), h(0.1, 4.0);
  for (int k = 0; k < 50; ++k) {
    const auto z = point3(u(rng), u(rng), h(rng));
    const auto w = hypgeom::iota(hypgeom::iota_inv(z));
    CHECK((w.x - z.x).norm() < 1e-12);
    CHECK(std::abs(w.y - z.y) < 1e-12);
  }
  Eigen::VectorXd off(3);
  off << 0.0, 0.0, 2.0;
  CHECK_THROWS_AS(hypgeom::iota(off), Error);
}

TEST_CASE("action parameters against the Mobius height") {
  const auto id = hypgeom::action_params(IsometryMatrix::identity(2));
  CHECK(id.lambda == doctest::Approx(0.0));
  REQUIRE(id.alpha.has_value());
  CHECK(*id.alpha == doctest::Approx(1.0));

  Eigen::Matrix2d n;
  n << 1, 3.5, 0, 1;
  const auto tr = hypgeom::action_params(lattices::embed_sl2r(n));
  CHECK(tr.lambda == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(*tr.alpha == doctest::Approx(1.0));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0), h(0.2, 3.0);
  for (int k = 0; k < 10; ++k) {
    const Eigen::Matrix2d m = random_sl2r(rng);
    const auto p = hypgeom::action_params(lattices::embed_sl2r(m));
    CHECK(p.lambda == doctest::Approx(m(1, 0) * m(1, 0)));
    REQUIRE(p.eta.has_value());
    CHECK((*p.eta)(0) == doctest::Approx(m(1, 1) / m(1, 0)));
    for (int j = 0; j < 10; ++j) {
      const std::complex<double> z(u(rng), h(rng));
      const double y_image = mobius(m, z).imag();
      const double x_eta = z.real() + (*p.eta)(0);
      CHECK(z.imag() / y_image ==
            doctest::Approx(p.lambda * (z.imag() * z.imag() + x_eta * x_eta)).epsilon(1e-9));
    }
  }
}

TEST_CASE("apply_isometry") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0), h(0.2, 3.0);
  const auto z0 = point2(0.4, 1.3);
  const auto same = hypgeom::apply_isometry(IsometryMatrix::identity(2), z0);
  CHECK(same.x(0) == doctest::Approx(0.4));
  CHECK(same.y == doctest::Approx(1.3));

  Eigen::Matrix2d s;
  s << 0, -1, 1, 0;
  const auto fixed = hypgeom::apply_isometry(lattices::embed_sl2r(s), point2(0.0, 1.0));
  CHECK(std::abs(fixed.x(0)) < 1e-12);
  CHECK(fixed.y == doctest::Approx(1.0));

  for (int k = 0; k < 20; ++k) {
    const Eigen::Matrix2d m = random_sl2r(rng);
    const std::complex<double> z(u(rng), h(rng));
    const auto w = hypgeom::apply_isometry(lattices::embed_sl2r(m), point2(z.real(), z.imag()));
    const auto expect = mobius(m, z);
    CHECK(w.x(0) == doctest::Approx(expect.real()).epsilon(1e-9));
    CHECK(w.y == doctest::Approx(expect.imag()).epsilon(1e-9));
  }
}

TEST_CASE("quaternionic action in dimension three") {
  Eigen::Matrix2cd s;
  s << 0.0, -1.0, 1.0, 0.0;
  const auto w = hypgeom::apply_isometry(lattices::embed_sl2c(s), point3(0.0, 0.0, 2.0));
  CHECK(w.y == doctest::Approx(0.5));

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5), h(0.3, 2.0);
  for (int k = 0; k < 20; ++k) {
    using C = std::complex<double>;
    const C a(u(rng) + 2.0, u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
    const C d = (1.0 + b * c) / a;
    Eigen::Matrix2cd m;
    m << a, b, c, d;
    const C x(u(rng), u(rng));
    const double y = h(rng);
    const double den = std::norm(c * x + d) + std::norm(c) * y * y;
    const auto img = hypgeom::apply_isometry(lattices::embed_sl2c(m), point3(x.real(), x.imag(), y));
    CHECK(img.y == doctest::Approx(y / den).epsilon(1e-9));
    const C x_image = ((a * x + b) * std::conj(c * x + d) + a * std::conj(c) * y * y) / den;
    CHECK(std::abs(C(img.x(0), img.x(1)) - x_image) < 1e-9);
  }
}

TEST_CASE("distance invariance and the lambda constant") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0), h(0.2, 3.0);
  for (int k = 0; k < 10; ++k) {
    const auto A = lattices::embed_sl2r(random_sl2r(rng));
    const auto p = hypgeom::action_params(A);
    for (int j = 0; j < 10; ++j) {
      const auto z1 = point2(u(rng), h(rng)), z2 = point2(u(rng), h(rng));
      const double before = hypgeom::hyperbolic_distance(z1, z2);
      const double after = hypgeom::hyperbolic_distance(hypgeom::apply_isometry(A, z1),
                                                        hypgeom::apply_isometry(A, z2));
      CHECK(std::abs(before - after) < 1e-10);
    }
    if (p.lambda > 0.0) {
      for (int j = 0; j < 100; ++j) {
        const auto z = point2(u(rng), h(rng));
        const double xe = z.x(0) + (*p.eta)(0);
        const double c = hypgeom::apply_isometry(A, z).y * (z.y * z.y + xe * xe) / z.y;
        CHECK(c == doctest::Approx(1.0 / p.lambda).epsilon(1e-8));
      }
    }
    Eigen::Matrix2d n;
    n << 1, u(rng), 0, 1;
    const auto q = hypgeom::action_params(A * lattices::embed_sl2r(n));
    CHECK(q.lambda == doctest::Approx(p.lambda).epsilon(1e-9));
  }
}
