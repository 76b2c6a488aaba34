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
#include <filesystem>
#include <vector>

#include "hypscatter/dirichlet.hpp"
#include "hypscatter/lattices.hpp"
#include "hypscatter/specfun.hpp"
#include "hypscatter/zerodist.hpp"

namespace hs::scattering {

/// (Gamma(s - (d-1)/2) / Gamma(s))^kappa.
struct GammaFactor {
  int d = 2;
  int kappa = 1;

  Complex eval(Complex s) const;
};

enum class EntryKind { closed_form, series };

/// One phi_ij backed by a truncated double-coset series.
struct SeriesEntry {
  lattices::DoubleCosetSpectrum spectrum;
  dirichlet::PositiveDirichletSeries normalized;  // in w with s = (d-1)(w+1)/2
  double constant = 0.0;                          // c_j = pi^{(d-1)/2} / v_j
  bool empty = false;
  bool underpopulated = false;  // fewer than 5 lambda classes
};

/// L(s) = a b^{d-1-2s} L*(s).
struct Normalization {
  double a = 1.0;  // may be negative when the leading determinant term is
  double b = 1.0;
};

struct ScatteringModel {
  lattices::LatticeId lattice;
  int d = 2;
  int kappa = 1;
  EntryKind kind = EntryKind::closed_form;
  std::vector<SeriesEntry> entries;  // kappa x kappa, row-major (series models)
  double lambda_max = 0.0;
  Normalization normalization;
  bool has_normalization = true;  // false if the truncated determinant vanishes
  double a_gamma = 1.0;  // |L*((d-1)/2 + it)| / |Gamma((d-1)/2 + it)/Gamma(it)|^kappa
  std::vector<zerodist::RealPole> lstar_poles;  // real poles of L* in ((d-1)/2, d]
  double lambda1 = 0.0;                         // first frequency of L* above 1
  double coeff1 = 0.0;                          // and its coefficient
  double validity_margin = 0.05;                // series: Re s > d - 1 + margin
  specfun::PrecisionProfile precision;

  const SeriesEntry& entry(int i, int j) const { return entries.at(i * kappa + j); }
};

ScatteringModel build_closed_form(const lattices::LatticeModel& model,
                                  const specfun::PrecisionProfile& prof = {});

/// Throws Error(budget) if the enumeration is too large.
ScatteringModel build_from_double_cosets(const lattices::LatticeModel& model, double lambda_max);

struct PhiValue {
  Eigen::MatrixXcd value;
  Eigen::MatrixXd tail_bound;  // zero for closed-form models
};

/// Throws Error(domain) outside the validity region of a series model.
PhiValue phi_with_bound(const ScatteringModel& m, Complex s);
Eigen::MatrixXcd phi_matrix(const ScatteringModel& m, Complex s);
Complex scattering_determinant(const ScatteringModel& m, Complex s);

/// L(s) = det phi(s) (Gamma(s) / Gamma(s - (d-1)/2))^kappa.
Complex L_function(const ScatteringModel& m, Complex s);

/// Normalized L*; closed-form models use their zeta quotient directly.
Complex L_star(const ScatteringModel& m, Complex s);

/// L* computed through det phi (independent of the closed formula).
Complex L_star_from_determinant(const ScatteringModel& m, Complex s);

/// |phi(s) phi(d-1-s) - I| in the max-row-sum norm (closed-form models).
double functional_equation_residual(const ScatteringModel& m, Complex s);

struct MaassSelbergCheck {
  double lhs = 0.0;  // max_ij |phi_ij(sigma + it)|
  double rhs = 0.0;  // sqrt(1 + x^2) + x, x = (2 sigma + 1 - d) / (2t)
  bool ok = true;    // lhs <= C rhs
};

MaassSelbergCheck maass_selberg_bound_check(const ScatteringModel& m, double sigma, double t,
                                            double C = 1.0);

/// Ratio |L*((d-1)/2 + it)| / |Gamma((d-1)/2 + it)/Gamma(it)|^kappa at each t.
std::vector<double> critical_line_ratios(const ScatteringModel& m, const std::vector<double>& ts);

/// L* evaluator and pole data for the zero-distribution code.
zerodist::LStarData lstar_data(const ScatteringModel& m);

/// JSON descriptor (d, kappa, normalization, a_Gamma) plus one CSV per series entry.
void export_model(const ScatteringModel& m, const std::filesystem::path& dir);

}  // namespace hs::scattering
