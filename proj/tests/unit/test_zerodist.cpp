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

#include <cmath>
#include <numeric>

#include "hypscatter/error.hpp"
#include "hypscatter/lattices.hpp"
#include "hypscatter/scattering.hpp"
#include "hypscatter/zerodist.hpp"

using namespace hs;
using namespace hs::zerodist;

namespace {

ZeroRecord zero(double beta, double gamma, int mult = 1) {
  ZeroRecord z;
  z.beta = beta;
  z.gamma = gamma;
  z.multiplicity = mult;
  return z;
}

// 1 + c 2^{-s}: zeros at log2(c) + i (2k+1) pi / log 2.
LStarData two_term(double c) {
  LStarData d;
  d.eval = [c](Complex s) { return 1.0 + c * std::pow(2.0, -s); };
  d.d = 2;
  d.kappa = 1;
  d.lambda1 = 2.0;
  d.coeff1 = c;
  return d;
}

}  // namespace

TEST_CASE("argument principle counts") {
  const ComplexFn f = [](Complex s) { return s * s + 1.0; };
  CHECK(count_zeros(f, {-1.0, 1.0, 0.5, 1.5}) == 1);
  CHECK(count_zeros(f, {-1.0, 1.0, -2.0, 2.0}) == 2);
  CHECK(count_zeros(f, {2.0, 3.0, -1.0, 1.0}) == 0);
  CHECK(count_zeros([](Complex s) { return 1.0 / s; }, {-1.0, 1.0, -1.0, 1.0}) == -1);
  // additivity over a split
  const ComplexFn g = [](Complex s) { return std::sin(s); };
  const int whole = count_zeros(g, {-0.5, 7.0, -1.0, 1.0});
  CHECK(whole == 3);
  CHECK(count_zeros(g, {-0.5, 2.0, -1.0, 1.0}) + count_zeros(g, {2.0, 7.0, -1.0, 1.0}) == whole);
  CHECK_THROWS_AS(count_zeros(f, {-1.0, 1.0, 1.0, 1.0}), Error);

  const ComplexFn edge = [](Complex s) { return s - Complex(0.0, 0.5); };
  CHECK_THROWS_AS(count_zeros(edge, {-1.0, 1.0, 0.5, 1.0}), PhaseStepError);
  const auto moved = count_zeros_perturbed(edge, {-1.0, 1.0, 0.5, 1.0});
  CHECK(moved.perturbations >= 1);
  CHECK(moved.count == 0);
  CHECK(moved.rectangle.im_min > 0.5);
}

TEST_CASE("locate zeros with multiplicity") {
  const Complex a(0.3, 2.0), b(0.1, 0.5);
  const ComplexFn f = [&](Complex s) { return (s - a) * (s - a) * (s - b); };
  const auto zs = locate_zeros(f, {-1.0, 1.0, 0.0, 3.0}, 1e-10);
  REQUIRE(zs.size() == 2);
  CHECK(std::abs(Complex(zs[0].beta, zs[0].gamma) - b) < 1e-8);
  CHECK(zs[0].multiplicity == 1);
  CHECK(std::abs(Complex(zs[1].beta, zs[1].gamma) - a) < 1e-6);
  CHECK(zs[1].multiplicity == 2);
}

TEST_CASE("zero sums and the sandwich") {
  const std::vector<ZeroRecord> zs = {zero(0.7, 0.0), zero(0.9, 3.0), zero(0.6, 8.0, 2)};
  CHECK(F1_sum(zs, 0.5, 5.0) == doctest::Approx(0.2 + 2 * 0.4));
  CHECK(F1_sum(zs, 0.5, 5.0, Mirror::none) == doctest::Approx(0.2 + 0.4));
  CHECK(F1_sum(zs, 0.95, 100.0) == 0.0);
  CHECK(F_smoothed_sum(zs, 0.5, 5.0) == doctest::Approx(5.0 * 0.2 + 2 * 2.0 * 0.4));
  CHECK(F1_sum(zs, 0.5, 10.0) == doctest::Approx(0.2 + 0.8 + 2 * 2 * 0.1));
  for (double T = 1.0; T < 20.0; T += 0.5)
    CHECK(sandwich_check(F_smoothed_sum(zs, 0.5, T - 1.0), F_smoothed_sum(zs, 0.5, T),
                         F_smoothed_sum(zs, 0.5, T + 1.0), F1_sum(zs, 0.5, T)));
  CHECK_FALSE(sandwich_check(0.0, 1.0, 1.5, 0.2));
  CHECK_THROWS_AS(F1_sum({zero(0.7, -1.0)}, 0.5, 5.0), Error);
}

TEST_CASE("Littlewood's identity on a two-term series") {
  const double c = std::pow(2.0, 0.8);
  const auto lstar = two_term(c);
  const double step = kPi / std::log(2.0);
  std::vector<ZeroRecord> zs;
  for (int k = 0; k < 10; ++k) zs.push_back(zero(0.8, (2 * k + 1) * step));
  for (double alpha : {0.55, 0.7}) {
    for (double T : {10.0, 20.0, 30.0}) {
      const auto parts = littlewood_rhs(lstar, alpha, T);
      CHECK(std::abs(parts.total() - F1_sum(zs, alpha, T)) < 1e-5);
      CHECK(parts.pole_term == 0.0);
    }
  }
  CHECK(std::abs(littlewood_rhs(lstar, 0.9, 20.0).total()) < 1e-5);
  CHECK_THROWS_AS(littlewood_rhs(lstar, 0.4, 20.0), Error);

  const auto modular = scattering::lstar_data(
      scattering::build_closed_form(lattices::make_lattice(lattices::LatticeId::parse("SL2Z"))));
  CHECK(std::abs(littlewood_rhs(modular, 5.0, 20.0).total()) < 1e-6);
}

TEST_CASE("smoothed integral") {
  LStarData flat;
  flat.eval = [](Complex) { return Complex(1.0); };
  flat.kappa = 0;
  const auto s = smoothed_critical_integral(flat, 1.0, 30.0);
  CHECK(s.numeric == 0.0);
  CHECK(s.model == 0.0);
  // (1/2pi) int (T - |t|) log|1 + c 2^{-1/2 - it}| dt by the trapezoid rule
  const double c = 0.3, T = 12.0;
  const auto lstar = two_term(c);
  const int n = 200000;
  double trap = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = -T + 2.0 * T * i / n;
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    trap += w * (T - std::abs(t)) * std::log(std::abs(lstar.eval(Complex(0.5, t))));
  }
  trap *= 2.0 * T / n / (2.0 * kPi);
  CHECK(smoothed_critical_integral(lstar, 1.0, T).numeric == doctest::Approx(trap).epsilon(1e-6));
  const auto k = closed_form_constants(2, 1, 1.0 / std::sqrt(kPi));
  CHECK(main_term_linear_coefficient(2, 1, 1.0 / std::sqrt(kPi)) ==
        doctest::Approx(2.0 * k.B + 1.0 / (4.0 * kPi)));

  // the displayed B drifts quadratically; the corrected one tracks the integral
  const auto modular = scattering::lstar_data(
      scattering::build_closed_form(lattices::make_lattice(lattices::LatticeId::parse("SL2Z"))));
  for (double height : {40.0, 80.0}) {
    const auto v = smoothed_critical_integral(modular, 1.0 / std::sqrt(kPi), height);
    const double drift = (k.B_as_displayed - k.B) * height * height;
    CHECK(std::abs(v.numeric - v.model) < 0.01 * height * std::log(height));
    CHECK(std::abs(v.numeric - (v.model + drift)) > 10.0 * std::abs(v.numeric - v.model));
  }
}

TEST_CASE("phase integral against an unwrapped argument") {
  const auto m =
      scattering::build_closed_form(lattices::make_lattice(lattices::LatticeId::parse("SL2Z")));
  const ComplexFn phi = [&](Complex s) { return scattering::scattering_determinant(m, s); };
  for (double T : {5.0, 20.0}) {
    const int n = static_cast<int>(T * 2000);
    double total = 0.0;
    double prev = std::arg(phi(Complex(0.5, -T)));
    for (int i = 1; i <= n; ++i) {
      const double a = std::arg(phi(Complex(0.5, -T + 2.0 * T * i / n)));
      total += std::remainder(a - prev, 2.0 * kPi);
      prev = a;
    }
    CHECK(phase_integral(phi, 2, T) == doctest::Approx(-total / (2.0 * kPi)).epsilon(1e-8));
  }
  // phase of a conjugation-symmetric function is odd in t
  CHECK(std::abs(phase_integral(phi, 2, 0.0)) < 1e-12);
}

TEST_CASE("main-term fit and strip table") {
  std::vector<ZeroRecord> zs;
  for (int k = 1; k <= 60; ++k) zs.push_back(zero(1.0, 1.7 * k));
  const std::vector<double> grid = {20.0, 40.0, 60.0, 80.0, 100.0};
  const auto fit = verify_main_term(zs, 2, 1, grid);
  CHECK(fit.leading == doctest::Approx(1.0 / (2.0 * kPi)));
  double normal = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(fit.residuals[i] == doctest::Approx(fit.F1_values[i] - fit.leading * grid[i] * std::log(grid[i]) -
                                              fit.A * grid[i]));
    normal += fit.residuals[i] * grid[i];
  }
  CHECK(std::abs(normal) < 1e-8);
  CHECK_THROWS_AS(verify_main_term({}, 2, 1, grid), Error);
  CHECK_THROWS_AS(verify_main_term(zs, 2, 1, {20.0}), Error);

  const auto rows = verify_strip_concentration(zs, 2, 0.9, {10.0, 50.0});
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].F1 == doctest::Approx(F1_sum(zs, 0.9, 50.0)));
  CHECK(rows[1].scale == doctest::Approx(50.0 * std::min(std::log(1.0 / 0.15), std::log(std::log(50.0)))));
  CHECK(rows[1].ratio == doctest::Approx(rows[1].F1 / rows[1].scale));
  CHECK_THROWS_AS(verify_strip_concentration(zs, 2, 0.7, {10.0}), Error);
  CHECK_THROWS_AS(verify_strip_concentration(zs, 2, 0.9, {2.0}), Error);
}
