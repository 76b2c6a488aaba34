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

#include <cstdint>
#include <string>
#include <vector>

#include "hypscatter/hypgeom.hpp"

namespace hs::lattices {

enum class LatticeKind { sl2z, gamma0, gaussian };

struct LatticeId {
  LatticeKind kind = LatticeKind::sl2z;
  int p = 0;  // level, only for gamma0

  /// "SL2Z", "Gamma0(p)", "SL2ZiGaussian"
  std::string name() const;
  static LatticeId parse(const std::string& name);
  bool operator==(const LatticeId&) const = default;
};

/// Gaussian integer with exact arithmetic; rational integers have im = 0.
struct Gauss {
  std::int64_t re = 0, im = 0;

  Gauss operator+(Gauss o) const { return {re + o.re, im + o.im}; }
  Gauss operator-(Gauss o) const { return {re - o.re, im - o.im}; }
  Gauss operator-() const { return {-re, -im}; }
  Gauss operator*(Gauss o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  bool operator==(const Gauss&) const = default;
  auto operator<=>(const Gauss&) const = default;
  std::int64_t norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
};

/// 2x2 matrix (a b; c d) over Z[i] with determinant 1.
struct Mat2 {
  Gauss a, b, c, d;

  Mat2 operator*(const Mat2& o) const;
  Gauss det() const { return a * d - b * c; }
  Gauss trace() const { return a + d; }
  bool operator==(const Mat2&) const = default;
  auto operator<=>(const Mat2&) const = default;
};

/// Representative of +-M with the first nonzero entry in the right half-plane
/// (positive for rational matrices).
Mat2 psl_canonical(const Mat2& m);

struct CuspDatum {
  std::string label;
  hypgeom::IsometryMatrix scaling_element;
  Eigen::MatrixXd translation_basis;  // columns span the lattice in R^{d-1}
  double volume = 1.0;                // covolume of translation_basis
  int width = 1;                      // classical cusp width
};

struct LatticeModel {
  LatticeId id;
  int d = 2;
  int kappa = 1;
  std::vector<CuspDatum> cusps;
};

LatticeModel make_lattice(const LatticeId& id);

/// SL2(R) -> SO+(2,1). Throws invalid_argument unless det m = 1.
hypgeom::IsometryMatrix embed_sl2r(const Eigen::Matrix2d& m);
/// SL2(C) -> SO+(3,1). Throws invalid_argument unless det m = 1.
hypgeom::IsometryMatrix embed_sl2c(const Eigen::Matrix2cd& m);
/// Embeds an exact element of the model's group.
hypgeom::IsometryMatrix embed(const LatticeModel& model, const Mat2& m);

struct DoubleCosetEntry {
  double lambda = 0.0;
  std::int64_t count = 0;
};

struct DoubleCosetSpectrum {
  std::vector<DoubleCosetEntry> entries;  // strictly ascending lambda
};

struct DoubleCosetRepresentative {
  std::int64_t lambda = 0;  // every lambda of the implemented models is an integer
  Mat2 gamma;
};

inline constexpr std::int64_t kDefaultEnumerationBudget = 60'000'000;

/// Double cosets with 0 < lambda <= lambda_max for the cusp pair (i, j).
/// Throws Error(budget) if the enumeration would exceed `budget` steps.
DoubleCosetSpectrum enumerate_double_cosets(const LatticeModel& model, int i, int j,
                                            double lambda_max,
                                            std::int64_t budget = kDefaultEnumerationBudget);

/// One group element per double coset (same order as the enumeration).
std::vector<DoubleCosetRepresentative> double_coset_representatives(
    const LatticeModel& model, int i, int j, double lambda_max,
    std::int64_t budget = kDefaultEnumerationBudget);

/// "lambda,count" CSV.
std::string to_csv(const DoubleCosetSpectrum& spec);

struct GroupElement {
  Mat2 m;
  hypgeom::IsometryMatrix embedded;
};

/// All PSL elements of the group with max |entry| <= height_bound (real and
/// imaginary parts for the Gaussian model), in lexicographic order of their
/// canonical representatives. The identity is always included.
std::vector<GroupElement> enumerate_group_elements(const LatticeModel& model, int height_bound);

/// Number-theory helpers shared with the length-spectrum code.
std::int64_t gcd(std::int64_t a, std::int64_t b);
/// x, y with a x + b y = gcd(a, b) >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);
Gauss gauss_gcd(Gauss a, Gauss b);

}  // namespace hs::lattices
