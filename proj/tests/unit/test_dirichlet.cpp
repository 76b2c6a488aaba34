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
#include <filesystem>
#include <numeric>

#include "hypscatter/dirichlet.hpp"
#include "hypscatter/error.hpp"
#include "hypscatter/specfun.hpp"

using namespace hs;
using namespace hs::dirichlet;

namespace {

// Totient by trial division, independent of the library sieve.
std::int64_t phi_trial(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

PositiveDirichletSeries single(double lambda, double a) {
  PositiveDirichletSeries f;
  f.lambdas = {lambda};
  f.coefficients = {a};
  f.complete = true;
  return f;
}

}  // namespace

TEST_CASE("evaluate") {
  const auto z = zeta_series(100000);
  const auto v = evaluate(z, 2.0);
  CHECK(std::abs(v.value - kPi * kPi / 6.0) <= v.tail_bound);
  CHECK(v.tail_bound < 1e-4);

  const auto one = evaluate(single(2.0, 1.0), 3.0);
  CHECK(one.value.real() == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(one.value.imag() == 0.0);
  CHECK(one.tail_bound == 0.0);

  const auto f = scaled_modular_series(1000000);
  CompensatedSum direct;
  for (std::int64_t n = 1; n <= 1000000; ++n)
    direct.add(static_cast<double>(phi_trial(n)) / std::pow(static_cast<double>(n), 3.0));
  const auto m = evaluate(f, 2.0);
  CHECK(std::abs(m.value.real() - direct.value()) < 1e-12);
  const double closed = (kPi * kPi / 6.0) / specfun::riemann_zeta(3.0).real();
  CHECK(std::abs(m.value.real() - closed) <= m.tail_bound);

  CHECK_THROWS_AS(evaluate(z, Complex(1.0, 2.0)), Error);
  CHECK_FALSE(evaluate(z, 1.5, 100, 1e-12).within_tolerance);
}

TEST_CASE("summatory") {
  const auto z = zeta_series(100);
  CHECK(summatory(z, 10.5) == 10.0);
  CHECK(summatory(z, 0.5) == 0.0);
  const auto f = scaled_modular_series(100);
  const double expect = 1.0 + 1.0 / 2 + 2.0 / 3 + 1.0 / 2 + 4.0 / 5 + 1.0 / 3 + 6.0 / 7 + 1.0 / 2 +
                        2.0 / 3 + 2.0 / 5;
  CHECK(summatory(f, 10.0) == doctest::Approx(expect).epsilon(1e-14));
  std::vector<double> xs;
  for (double x = 0.5; x < 100.0; x += 0.7) xs.push_back(x);
  const auto A = summatory_at(f, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(A[i] == doctest::Approx(summatory(f, xs[i])).epsilon(1e-14));
    if (i) CHECK(A[i] >= A[i - 1]);
  }
}

TEST_CASE("summatory asymptotic fit") {
  std::vector<double> grid;
  for (double x = 10.0; x <= 1e6; x *= 1.3) grid.push_back(x);
  const auto zf = summatory_asymptotic_fit(zeta_series(1000000), grid);
  CHECK(zf.residue == doctest::Approx(1.0).epsilon(0.01));
  const auto mf = summatory_asymptotic_fit(scaled_modular_series(1000000), grid);
  CHECK(mf.residue == doctest::Approx(6.0 / (kPi * kPi)).epsilon(0.01));
  CHECK(mf.max_deviation < 2.0);
  CHECK_THROWS_AS(summatory_asymptotic_fit(zeta_series(10), {5.0}), Error);
}

TEST_CASE("smoothed truncation") {
  const auto f = single(2.0, 3.0);
  CHECK(std::abs(smoothed_truncation(f, {1.5, 2}, 1.0)) == 0.0);
  const Complex s(1.3, 2.0);
  for (int k : {1, 4, 10}) {
    const Complex expect = 3.0 * std::pow(2.0, -s) * std::pow(0.5, k);
    CHECK(std::abs(smoothed_truncation(f, {4.0, k}, s) - expect) < 1e-15);
  }
  // window estimate against the zeta function itself
  const auto z = zeta_series(10000);
  const Complex s2(1.2, 30.0);
  const double gap = std::abs(smoothed_truncation(z, {1e4, 3}, s2) - specfun::riemann_zeta(s2));
  CHECK(gap < 1.0);
  // k = 0 with a large window is the plain partial sum
  const auto big = zeta_series(1000000);
  const auto v = evaluate(big, 2.5);
  CHECK(std::abs(smoothed_truncation(big, {1e6, 0}, 2.5) - v.value) < 1e-14);
  CHECK(std::abs(v.value - specfun::riemann_zeta(2.5)) <= v.tail_bound);
  CHECK_THROWS_AS(TruncationWindow({0.5, 1}).validate(), Error);
  CHECK(TruncationWindow{10.0, 1}.bound_applies(0.5));
  CHECK_FALSE(TruncationWindow{10.0, 1}.bound_applies(1.0));
}

TEST_CASE("mean square") {
  const auto one = mean_square([](Complex) { return Complex(1.0); }, 0.9, 40.0, 0.5);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-10));
  const auto zeta = [](Complex s) { return specfun::riemann_zeta(s); };
  const auto ms = mean_square(zeta, 1.5, 50.0, 0.5);
  CHECK(ms.value == doctest::Approx(specfun::riemann_zeta(3.0).real()).epsilon(0.05));
  CHECK_THROWS_AS(mean_square(zeta, 0.4, 50.0, 0.5), Error);
  CHECK(sigma1(0.5) == 0.5);
  CHECK(sigma1(1.0) == 0.75);
  CHECK(sigma1(0.5, Sigma1Rule::three_quarters) == 0.75);
  CHECK(sigma1(2.0, Sigma1Rule::three_quarters) == sigma1(2.0));
}

TEST_CASE("series metadata, validation and files") {
  const auto phi = totients(500);
  for (std::int64_t n = 1; n <= 500; ++n) CHECK(phi[n] == phi_trial(n));

  PositiveDirichletSeries bad = single(2.0, 1.0);
  bad.lambdas.push_back(1.0);
  bad.coefficients.push_back(1.0);
  CHECK_THROWS_AS(bad.validate(), Error);
  PositiveDirichletSeries neg = single(2.0, -1.0);
  CHECK_THROWS_AS(neg.validate(), Error);

  lattices::DoubleCosetSpectrum spec;
  spec.entries = {{1.0, 1}, {4.0, 1}, {9.0, 2}};
  const auto g = normalized_from_spectrum(spec, 2, 6.0 / (kPi * kPi));
  REQUIRE(g.size() == 3);
  CHECK(g.lambdas[2] == doctest::Approx(3.0));
  CHECK(g.coefficients[2] == doctest::Approx(2.0 / 3.0));

  auto h = scaled_modular_series(50);
  h.real_poles = {{0.5, 1}};
  const auto path = std::filesystem::temp_directory_path() / "hs_series_test.csv";
  save_series(h, path);
  const auto back = load_series(path);
  REQUIRE(back.size() == h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    CHECK(back.lambdas[k] == doctest::Approx(h.lambdas[k]).epsilon(1e-12));
    CHECK(back.coefficients[k] == doctest::Approx(h.coefficients[k]).epsilon(1e-12));
  }
  CHECK(back.residue_at_1 == doctest::Approx(h.residue_at_1));
  REQUIRE(back.real_poles.size() == 1);
  CHECK(back.real_poles[0].degree == 1);
  std::filesystem::remove(path);
  std::filesystem::remove(path.string() + ".json");
}
