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

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "hypscatter/error.hpp"
#include "hypscatter/io.hpp"
#include "hypscatter/specfun.hpp"

using namespace hs;
using namespace hs::specfun;

namespace {

bool rel_close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

// Odlyzko's table.
const double kFirstZeros[] = {14.134725141734693, 21.022039638771555, 25.010857580145688,
                              30.424876125859513, 32.935061587739189};

}  // namespace

TEST_CASE("gamma") {
  CHECK(rel_close(specfun::gamma(1.0), 1.0, 1e-14));
  CHECK(rel_close(specfun::gamma(0.5), std::sqrt(kPi), 1e-14));
  CHECK(rel_close(specfun::gamma(5.0), 24.0, 1e-13));
  const double mod2 = std::norm(specfun::gamma(Complex(0.5, 5.0)));
  CHECK(mod2 == doctest::Approx(kPi / std::cosh(5.0 * kPi)).epsilon(1e-12));
  CHECK_THROWS_AS(specfun::gamma(-2.0), Error);
  CHECK_THROWS_AS(specfun::gamma(0.0), Error);
  for (double x = 0.1; x < 20.0; x += 0.37) CHECK(rel_close(specfun::gamma(x), std::tgamma(x), 1e-12));
  for (double x = -3.7; x < 0.0; x += 0.5) CHECK(rel_close(specfun::gamma(x), std::tgamma(x), 1e-12));
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int k = 0; k < 50; ++k) {
    const Complex s(u(rng), u(rng));
    CHECK(rel_close(specfun::gamma(s + 1.0), s * specfun::gamma(s), 1e-11));
    CHECK(std::abs(std::exp(log_gamma(Complex(std::abs(s.real()) + 0.1, s.imag()))) -
                   specfun::gamma(Complex(std::abs(s.real()) + 0.1, s.imag()))) <=
          1e-11 * std::abs(specfun::gamma(Complex(std::abs(s.real()) + 0.1, s.imag()))));
  }
  CHECK(rel_close(gamma_ratio(Complex(2.0, 1.0), 0.5),
                  specfun::gamma(Complex(1.5, 1.0)) / specfun::gamma(Complex(2.0, 1.0)), 1e-13));
}

TEST_CASE("riemann zeta") {
  CHECK(rel_close(riemann_zeta(2.0), kPi * kPi / 6.0, 1e-13));
  CHECK(rel_close(riemann_zeta(0.0), -0.5, 1e-13));
  CHECK(rel_close(riemann_zeta(-1.0), -1.0 / 12.0, 1e-12));
  CHECK_THROWS_AS(riemann_zeta(1.0), Error);
  CHECK(std::abs(riemann_zeta(Complex(0.5, 14.134725))) < 1e-6);
  for (double x : {-1.9, -0.5, 0.3, 0.7, 1.5, 2.5, 3.9})
    CHECK(rel_close(riemann_zeta(x), boost::math::zeta(x), 1e-12));
  // functional equation on a grid in the strip
  double worst = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const Complex s(0.05 + 0.9 * i / 9.0, 1.0 + 10.0 * j);
      const Complex rhs = std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
                          specfun::gamma(1.0 - s) * riemann_zeta(1.0 - s);
      worst = std::max(worst, std::abs(riemann_zeta(s) - rhs) / std::max(1.0, std::abs(rhs)));
    }
  CHECK(worst < 1e-8);
}

TEST_CASE("L(s, chi_-4) and the Dedekind zeta of Q(i)") {
  CHECK(rel_close(dirichlet_L_chi4(1.0), kPi / 4.0, 1e-13));
  CHECK(rel_close(dirichlet_L_chi4(0.0), 0.5, 1e-13));
  CHECK(rel_close(dirichlet_L_chi4(2.0), 0.915965594177219015, 1e-13));  // Catalan
  CHECK(rel_close(dedekind_zeta_Qi(2.0), riemann_zeta(2.0) * dirichlet_L_chi4(2.0), 1e-13));
  CHECK_THROWS_AS(dedekind_zeta_Qi(1.0), Error);
  // alternating-sum oracle for Re s > 1 with Abel summation on pairs
  const Complex s(1.7, 3.0);
  ComplexCompensatedSum direct;
  for (int n = 0; n < 400000; ++n) {
    const double k = 4.0 * n;
    direct.add(std::pow(k + 1.0, -s) - std::pow(k + 3.0, -s));
  }
  CHECK(std::abs(dirichlet_L_chi4(s) - direct.value()) < 1e-7);
}

TEST_CASE("hardy Z") {
  double worst = 0.0;
  for (double t = 0.0; t <= 100.0; t += 0.25) worst = std::max(worst, std::abs(hardy_Z_complex(t).imag()));
  CHECK(worst < 1e-10);
  CHECK(hardy_Z(14.0) * hardy_Z(14.3) < 0.0);
}

TEST_CASE("zeta zeros") {
  CHECK(zeta_zeros_up_to(10.0).zeros.empty());
  const auto c20 = zeta_zeros_up_to(20.0);
  REQUIRE(c20.zeros.size() == 1);
  CHECK(std::abs(c20.zeros[0].ordinate - kFirstZeros[0]) < 1e-8);
  const auto c50 = zeta_zeros_up_to(50.0);
  CHECK(c50.zeros.size() == 10);
  for (std::size_t k = 0; k < 5; ++k) CHECK(std::abs(c50.zeros[k].ordinate - kFirstZeros[k]) < 1e-8);
  for (double T : {30.0, 60.0, 100.0}) {
    const auto c = zeta_zeros_up_to(T);
    CHECK(static_cast<int>(c.zeros.size()) == c.argument_principle_count);
  }
  CHECK(zeta_zeros_up_to(100.0).zeros.size() == 29);
  CHECK_THROWS_AS(zeta_zeros_up_to(250.0), Error);
}

TEST_CASE("zero cache survives corruption") {
  const auto dir = std::filesystem::temp_directory_path() / "hs_specfun_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const PrecisionProfile prof;
  const auto first = zeta_zeros_cached(40.0, prof, dir);
  const auto path = zeta_cache_path(40.0, prof, dir);
  REQUIRE(std::filesystem::exists(path));
  std::ofstream(path) << "garbage,,\n1,2,3\n";
  const auto second = zeta_zeros_cached(40.0, prof, dir);
  REQUIRE(second.size() == first.size());
  for (std::size_t k = 0; k < first.size(); ++k) CHECK(second[k].ordinate == first[k].ordinate);
  CHECK(io::read_text(path).rfind("ordinate,refinement_error", 0) == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("precision profiles") {
  const auto dd = PrecisionProfile::parse("dd");
  CHECK(dd.tag() == "dd");
  CHECK(PrecisionProfile::parse("double").tag() == "double");
  CHECK_THROWS_AS(PrecisionProfile::parse("quad"), Error);
  PrecisionProfile bad;
  bad.euler_maclaurin_terms = 2;
  CHECK_THROWS_AS(bad.validate(), Error);
  for (double t : {5.0, 50.0, 150.0}) {
    const Complex s(0.5, t);
    CHECK(std::abs(riemann_zeta(s, dd) - riemann_zeta(s)) < 1e-10 * std::max(1.0, std::abs(riemann_zeta(s))));
  }
}
