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

#include <map>
#include <numeric>
#include <set>

#include "hypscatter/error.hpp"
#include "hypscatter/lattices.hpp"

using namespace hs;
using namespace hs::lattices;

namespace {

LatticeModel lat(const char* id) { return make_lattice(LatticeId::parse(id)); }

// Coprime (c, d), 0 <= d < c, c = 0 mod level: the cosets of the cusp at infinity.
std::map<std::int64_t, std::int64_t> coprime_pairs(std::int64_t c_max, std::int64_t level) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t c = level; c <= c_max; c += level)
    for (std::int64_t d = 0; d < c; ++d)
      if (std::gcd(c, d) == 1) ++out[c * c];
  return out;
}

Mat2 rational(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {{a, 0}, {b, 0}, {c, 0}, {d, 0}};
}

}  // namespace

TEST_CASE("lattice identifiers") {
  CHECK(LatticeId::parse("SL2Z").name() == "SL2Z");
  CHECK(LatticeId::parse("Gamma0(7)").name() == "Gamma0(7)");
  CHECK(LatticeId::parse("SL2ZiGaussian").name() == "SL2ZiGaussian");
  CHECK_THROWS_AS(LatticeId::parse("Gamma0(4)"), Error);
  CHECK_THROWS_AS(LatticeId::parse("PSL3"), Error);
  CHECK(lat("SL2Z").kappa == 1);
  CHECK(lat("Gamma0(3)").kappa == 2);
  CHECK(lat("SL2ZiGaussian").d == 3);
  for (const auto& cusp : lat("Gamma0(5)").cusps)
    CHECK(std::abs(cusp.translation_basis.determinant()) == doctest::Approx(cusp.volume));
}

TEST_CASE("embedding of generators") {
  Eigen::Matrix2d t;
  t << 1, 1, 0, 1;
  hypgeom::UpperHalfSpacePoint z;
  z.x = Eigen::VectorXd::Zero(1);
  z.y = 1.0;
  const auto w = hypgeom::apply_isometry(embed_sl2r(t), z);
  CHECK(w.x(0) == doctest::Approx(1.0));
  CHECK(w.y == doctest::Approx(1.0));
  Eigen::Matrix2d s;
  s << 0, -1, 1, 0;
  z.y = 2.0;
  CHECK(hypgeom::apply_isometry(embed_sl2r(s), z).y == doctest::Approx(0.5));
  Eigen::Matrix2d bad;
  bad << 2, 0, 0, 1;
  CHECK_THROWS_AS(embed_sl2r(bad), Error);
  CHECK(embed_sl2r(Eigen::Matrix2d::Identity()).matrix().isApprox(Eigen::MatrixXd::Identity(3, 3)));
}

TEST_CASE("double cosets of SL2Z") {
  const auto spec = enumerate_double_cosets(lat("SL2Z"), 0, 0, 10.0);
  REQUIRE(spec.entries.size() == 3);
  CHECK(spec.entries[0].lambda == 1.0);
  CHECK(spec.entries[0].count == 1);
  CHECK(spec.entries[1].lambda == 4.0);
  CHECK(spec.entries[1].count == 1);
  CHECK(spec.entries[2].lambda == 9.0);
  CHECK(spec.entries[2].count == 2);
  CHECK(enumerate_double_cosets(lat("SL2Z"), 0, 0, 0.5).entries.empty());

  const auto big = enumerate_double_cosets(lat("SL2Z"), 0, 0, 1e4);
  const auto oracle = coprime_pairs(100, 1);
  REQUIRE(big.entries.size() == oracle.size());
  for (const auto& e : big.entries) CHECK(e.count == oracle.at(static_cast<std::int64_t>(e.lambda)));
  CHECK(to_csv(spec).rfind("lambda,count\n", 0) == 0);
}

TEST_CASE("double cosets of Gamma0(2)") {
  const auto g2 = lat("Gamma0(2)");
  const auto inf = enumerate_double_cosets(g2, 0, 0, 17.0);
  REQUIRE(inf.entries.size() == 2);
  CHECK(inf.entries[0].lambda == 4.0);
  CHECK(inf.entries[0].count == 1);
  CHECK(inf.entries[1].lambda == 16.0);
  CHECK(inf.entries[1].count == 2);
  const auto oracle = coprime_pairs(40, 2);
  const auto big = enumerate_double_cosets(g2, 0, 0, 1600.0);
  REQUIRE(big.entries.size() == oracle.size());
  for (const auto& e : big.entries) CHECK(e.count == oracle.at(static_cast<std::int64_t>(e.lambda)));
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
    const auto off = enumerate_double_cosets(g2, i, j, 200.0);
    REQUIRE_FALSE(off.entries.empty());
    for (const auto& e : off.entries) CHECK(e.lambda > 0.0);
  }
}

TEST_CASE("representatives reproduce their lambda") {
  for (const char* id : {"SL2Z", "Gamma0(2)", "Gamma0(3)", "SL2ZiGaussian"}) {
    const auto model = lat(id);
    for (int i = 0; i < model.kappa; ++i)
      for (int j = 0; j < model.kappa; ++j) {
        const auto reps = double_coset_representatives(model, i, j, 60.0);
        REQUIRE_FALSE(reps.empty());
        for (const auto& r : reps) {
          CHECK(r.gamma.det() == Gauss{1, 0});
          const auto A = model.cusps[i].scaling_element.inverse() * embed(model, r.gamma) *
                         model.cusps[j].scaling_element;
          CHECK(hypgeom::action_params(A).lambda == doctest::Approx(double(r.lambda)).epsilon(1e-9));
        }
      }
  }
}

TEST_CASE("Gaussian double cosets count units once") {
  const auto spec = enumerate_double_cosets(lat("SL2ZiGaussian"), 0, 0, 30.0);
  REQUIRE_FALSE(spec.entries.empty());
  CHECK(spec.entries.front().lambda == 1.0);
  CHECK(spec.entries.front().count == 1);
  for (std::size_t k = 1; k < spec.entries.size(); ++k)
    CHECK(spec.entries[k].lambda > spec.entries[k - 1].lambda);
  CHECK_THROWS_AS(enumerate_double_cosets(lat("SL2ZiGaussian"), 0, 0, 1e6, 1000), Error);
}

TEST_CASE("group element enumeration") {
  const auto id_only = enumerate_group_elements(lat("SL2Z"), 0);
  REQUIRE(id_only.size() == 1);
  CHECK(id_only[0].m == rational(1, 0, 0, 1));

  std::set<Mat2> brute;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d)
          if (a * d - b * c == 1) brute.insert(psl_canonical(rational(a, b, c, d)));
  const auto one = enumerate_group_elements(lat("SL2Z"), 1);
  CHECK(one.size() == brute.size());
  for (const auto& e : one) CHECK(brute.count(e.m) == 1);

  const auto g = enumerate_group_elements(lat("SL2ZiGaussian"), 1);
  std::set<Mat2> all;
  for (const auto& e : g) all.insert(e.m);
  for (const auto& e : g) {
    const Mat2 inv{e.m.d, -e.m.b, -e.m.c, e.m.a};
    CHECK(all.count(psl_canonical(inv)) == 1);
  }
}

TEST_CASE("number theory helpers") {
  CHECK(lattices::gcd(12, 18) == 6);
  std::int64_t x = 0, y = 0;
  CHECK(ext_gcd(240, 46, x, y) == 2);
  CHECK(240 * x + 46 * y == 2);
  const Gauss g = gauss_gcd({3, 1}, {2, 0});  // (3+i) = (1+i)(2-i), 2 = -i(1+i)^2
  CHECK(g.norm() == 2);
}
