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

#include "hypscatter/error.hpp"
#include "hypscatter/lengths.hpp"

using namespace hs;
using namespace hs::lengths;

namespace {

lattices::LatticeModel lat(const char* id) { return lattices::make_lattice(lattices::LatticeId::parse(id)); }

double length_of_trace(double t) { return 2.0 * std::acosh(0.5 * t); }

}  // namespace

TEST_CASE("modular length spectrum") {
  CHECK(length_spectrum(lat("SL2Z"), 1.0).empty());
  const auto spec = length_spectrum(lat("SL2Z"), 8.0);
  REQUIRE(spec.size() >= 3);
  CHECK(spec[0].trace == 3);
  CHECK(spec[0].multiplicity == 1);
  CHECK(spec[0].length == doctest::Approx(2.0 * std::log((3.0 + std::sqrt(5.0)) / 2.0)));
  CHECK(spec[1].trace == 4);
  CHECK(spec[1].multiplicity == 2);
  CHECK(spec[2].trace == 5);
  CHECK(spec[2].multiplicity == 2);
  for (std::size_t k = 0; k < spec.size(); ++k) {
    CHECK(spec[k].length == doctest::Approx(length_of_trace(static_cast<double>(spec[k].trace))));
    if (k) CHECK(spec[k].length > spec[k - 1].length);
    CHECK(spec.back().length <= 8.0);
  }
  CHECK_THROWS_AS(length_spectrum(lat("SL2Z"), 16.0), Error);
  CHECK_THROWS_AS(length_spectrum(lat("SL2ZiGaussian"), 5.0), Error);
}

TEST_CASE("class numbers") {
  CHECK(narrow_class_number(5) == 1);
  CHECK(narrow_class_number(8) == 1);
  CHECK(narrow_class_number(12) == 2);
  CHECK(narrow_class_number(13) == 1);
  CHECK(narrow_class_number(21) == 2);
  CHECK_THROWS_AS(narrow_class_number(9), Error);
  CHECK_THROWS_AS(narrow_class_number(7), Error);
}

TEST_CASE("spectra against bounded brute force") {
  for (const char* id : {"SL2Z", "Gamma0(2)"}) {
    const auto model = lat(id);
    const auto oracle = brute_force_conjugacy_oracle(model, 12, 60);
    CHECK(oracle.saturated);
    CHECK(oracle.inverse_closed);
    const auto spec = length_spectrum(model, length_of_trace(12.5));
    REQUIRE(spec.size() == oracle.rows.size());
    for (std::size_t k = 0; k < spec.size(); ++k) {
      CHECK(spec[k].trace == oracle.rows[k].trace);
      CHECK(spec[k].multiplicity == oracle.rows[k].primitive_classes);
    }
  }
  CHECK_THROWS_AS(brute_force_conjugacy_oracle(lat("Gamma0(3)"), 10, 20), Error);
}

TEST_CASE("spectrum distance") {
  const auto a = length_spectrum(lat("SL2Z"), 10.0);
  CHECK(DL(a, a, 10.0) == 0.0);
  const auto same = compare_spectra(a, a, {4.0, 6.0, 8.0, 10.0});
  CHECK(std::isinf(same.dl_estimate));
  CHECK(same.dl_estimate < 0.0);
  auto b = a;
  b[3].multiplicity += 2;
  CHECK(DL(a, b, b[3].length - 1e-6) == 0.0);
  CHECK(DL(a, b, 10.0) == 2.0);
  const auto one = compare_spectra(a, b, {4.0, 6.0, 8.0, 10.0});
  CHECK(one.dl_estimate == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(DL(a, {}, 10.0) == doctest::Approx(
                               [&] {
                                 double n = 0;
                                 for (const auto& e : a) n += static_cast<double>(e.multiplicity);
                                 return n;
                               }()));
  CHECK_THROWS_AS(compare_spectra(a, b, {5.0, 4.0}), Error);
}

TEST_CASE("Ruelle and Selberg-type products") {
  const double L = 10.0;
  const auto spec = length_spectrum(lat("SL2Z"), L);
  const Complex s(1.5, 2.0);
  const auto R = ruelle_zeta(spec, s, L);
  Complex direct = 1.0;
  for (const auto& e : spec)
    direct *= std::pow(1.0 - std::exp(-s * e.length), static_cast<double>(e.multiplicity));
  CHECK(std::abs(R.value - direct) < 1e-13);
  CHECK(R.tail_bound > 0.0);
  const auto Z0 = surface_zeta(spec, s, L, 0);
  CHECK(std::abs(Z0.value - R.value) < 1e-14);
  CHECK_THROWS_AS(ruelle_zeta(spec, Complex(1.0, 0.0), L), Error);

  for (int a_max : {1, 3}) {
    CHECK(zeta_identity_check(spec, s, L, a_max).residual < 1e-12);
    const auto un = zeta_identity_check(spec, s, L, a_max, false);
    CHECK(un.residual == doctest::Approx(un.predicted).epsilon(1e-6));
  }
  const auto o = ruelle_orientation(spec, s, L, 2);
  CHECK(o.quotient < 1e-12);
  CHECK(o.inverse > 1e-3);
  CHECK_THROWS_AS(zeta_identity_check(spec, s, L, 0), Error);
  CHECK(growth_constant(spec) > 0.0);
  CHECK(growth_constant({}) == 0.0);
}

TEST_CASE("perturbation lattice") {
  const double two_pi = 2.0 * kPi;
  const std::vector<PerturbationTerm> single = {{two_pi, 1}};
  CHECK(std::abs(perturbation_quotient(single, Complex(0.3, 0.2), 2)) > 0.0);
  CHECK_THROWS_AS(perturbation_quotient(single, Complex(0.0, 1.0), 2), Error);
  const auto pts = locate_perturbation_points(single, 3, 5);
  CHECK(pts.size() == 4 * 11);
  for (const auto& p : pts) {
    CHECK(p.formula_order == 1);
    CHECK(p.located_order == 1);
  }
  const std::vector<PerturbationTerm> pair = {{two_pi, 1}, {kPi, -1}};
  for (const auto& p : locate_perturbation_points(pair, 3, 5)) {
    const long k = std::lround(p.location.imag());
    CHECK(p.formula_order == (k % 2 == 0 ? 0 : 1));
    CHECK(p.located_order == p.formula_order);
  }
  CHECK_THROWS_AS(perturbation_quotient({{0.0, 1}}, 1.0, 1), Error);
}
