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
#include <limits>
#include <vector>

#include "hypscatter/lattices.hpp"
#include "hypscatter/numeric.hpp"

namespace hs::lengths {

struct LengthSpectrumEntry {
  double length = 0.0;
  std::int64_t multiplicity = 0;
  std::int64_t trace = 0;  // |tr| of the 2x2 representative, 0 if synthetic
};

using LengthSpectrum = std::vector<LengthSpectrumEntry>;  // ascending length

inline constexpr double kMaxLength = 15.0;

/// Primitive closed geodesics with length <= L_max (L_max <= 15), one entry
/// per trace. SL2Z and Gamma0(p) only; throws invalid_argument otherwise and
/// Error(budget) beyond the length cap.
LengthSpectrum length_spectrum(const lattices::LatticeModel& model, double L_max);

/// Indefinite binary quadratic form a x^2 + b xy + c y^2.
struct Form {
  std::int64_t a = 0, b = 0, c = 0;
  std::int64_t disc() const { return b * b - 4 * a * c; }
  bool operator==(const Form&) const = default;
  auto operator<=>(const Form&) const = default;
};

/// One primitive hyperbolic conjugacy class of PSL2(Z).
struct PrimitiveClass {
  std::int64_t trace = 0;
  std::int64_t u = 0;  // t^2 - disc u^2 = 4 with (t, u) fundamental
  Form form;           // a reduced form in the class
  lattices::Mat2 gamma;
};

/// All primitive hyperbolic classes of PSL2(Z) with trace <= trace_max.
std::vector<PrimitiveClass> modular_primitive_classes(std::int64_t trace_max);

/// Number of proper equivalence classes of primitive forms of discriminant
/// disc (> 0, non-square), counted as cycles of reduced forms.
std::int64_t narrow_class_number(std::int64_t disc);

struct OracleRow {
  std::int64_t trace = 0;
  std::int64_t primitive_classes = 0;
};

struct OracleResult {
  std::vector<OracleRow> rows;       // traces with at least one primitive class
  std::vector<OracleRow> half_rows;  // same at entry_bound / 2
  bool saturated = false;            // rows == half_rows
  bool inverse_closed = false;       // gamma -> gamma^{-1} permutes the classes
  std::int64_t elements = 0;
};

/// Bounded brute force: all PSL elements with |entries| <= entry_bound and
/// 3 <= |trace| <= trace_max, joined under conjugation by generators,
/// primitive classes kept. SL2Z and Gamma0(2) only.
OracleResult brute_force_conjugacy_oracle(const lattices::LatticeModel& model,
                                          std::int64_t trace_max, std::int64_t entry_bound);

/// Sum over lengths <= T of |m1 - m2| (lengths matched to 1e-9 relative).
double DL(const LengthSpectrum& s1, const LengthSpectrum& s2, double T);

struct SpectrumComparison {
  std::vector<double> T_grid;
  std::vector<double> DL_values;
  double dl_estimate = -std::numeric_limits<double>::infinity();
};

/// Slope of log DL against T over the upper half of the grid; -inf when DL
/// vanishes there, 0 when only one point is positive.
SpectrumComparison compare_spectra(const LengthSpectrum& s1, const LengthSpectrum& s2,
                                   const std::vector<double>& T_grid);

struct ZetaValue {
  Complex value;
  Complex log_value;
  double tail_bound = 0.0;  // bound on |log of the omitted factors|
};

/// prod_{l <= L_max} (1 - e^{-s l})^m. Requires Re s > d - 1 + 0.05.
ZetaValue ruelle_zeta(const LengthSpectrum& spec, Complex s, double L_max, int d = 2);

/// prod_{l <= L_max} prod_{a=0}^{a_max} (1 - e^{-(s+a) l})^m.
ZetaValue surface_zeta(const LengthSpectrum& spec, Complex s, double L_max, int a_max, int d = 2);

struct IdentityCheck {
  double residual = 0.0;   // |R(s) - Z(s)/Z(s+1)|
  double predicted = 0.0;  // deficit of the factors left out (0 when matched)
};

/// Z(s) with a <= a_max against Z(s+1) with a <= a_max - 1 (matched) or
/// a <= a_max (unmatched, dropping the a_max + 1 row).
IdentityCheck zeta_identity_check(const LengthSpectrum& spec, Complex s, double L_max, int a_max,
                                  bool matched = true);

struct OrientationReport {
  double quotient = 0.0;  // |R(s) - Z(s)/Z(s+1)|
  double inverse = 0.0;   // |R(s) - Z(s+1)/Z(s)|
};

/// Which way round the Ruelle/Selberg factorization holds at matched truncation.
OrientationReport ruelle_orientation(const LengthSpectrum& spec, Complex s, double L_max,
                                     int a_max);

/// sup over the spectrum of N(l) (d-1) l / e^{(d-1) l}.
double growth_constant(const LengthSpectrum& spec, int d = 2);

struct PerturbationTerm {
  double length = 0.0;
  int delta = 0;
};

/// prod_j prod_{a=0}^{a_max} (1 - e^{-(s+a) l_j})^{delta_j}. Throws
/// Error(domain) at a zero or pole.
Complex perturbation_quotient(const std::vector<PerturbationTerm>& terms, Complex s, int a_max);

struct LatticePoint {
  Complex location;
  int a = 0;
  int b = 0;
  int formula_order = 0;  // sum of delta_i over i with l_i b in l_j Z
  int located_order = 0;  // winding number on a small square
};

/// Every -a + 2 pi i b / l_j with 0 <= a <= a_max, |b| <= b_max (merged when
/// they coincide), with the formula order and the argument-principle order.
std::vector<LatticePoint> locate_perturbation_points(const std::vector<PerturbationTerm>& terms,
                                                     int a_max, int b_max);

}  // namespace hs::lengths
