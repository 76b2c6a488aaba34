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

#include "hypscatter/hypscatter.h"

#include <exception>
#include <string>
#include <vector>

#include "hypscatter/census.hpp"
#include "hypscatter/drivers.hpp"
#include "hypscatter/error.hpp"
#include "hypscatter/lengths.hpp"
#include "hypscatter/scattering.hpp"

struct hs_model {
  hs::scattering::ScatteringModel m;
};

struct hs_zero_list {
  std::vector<hs::zerodist::ZeroRecord> zeros;
};

struct hs_spectrum {
  hs::lengths::LengthSpectrum entries;
};

namespace {

thread_local std::string last_error;

template <class F>
hs_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HS_OK;
  } catch (const hs::Error& e) {
    last_error = e.what();
    return static_cast<hs_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return HS_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HS_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) throw hs::Error(hs::ErrorCode::invalid_argument, std::string(name) + " is null");
}

hs::lattices::LatticeModel lattice_of(const char* id) {
  need(id, "lattice");
  return hs::lattices::make_lattice(hs::lattices::LatticeId::parse(id));
}

void put(hs::Complex z, double* re, double* im) {
  need(re, "out_re");
  need(im, "out_im");
  *re = z.real();
  *im = z.imag();
}

}  // namespace

extern "C" {

const char* hs_version(void) {
  static const std::string v = hs::drivers::version();
  return v.c_str();
}

const char* hs_last_error(void) { return last_error.c_str(); }

hs_status hs_model_closed_form(const char* lattice, const char* precision, hs_model** out) {
  return guarded([&] {
    need(out, "out");
    const auto prof = hs::specfun::PrecisionProfile::parse(precision ? precision : "double");
    *out = new hs_model{hs::scattering::build_closed_form(lattice_of(lattice), prof)};
  });
}

hs_status hs_model_series(const char* lattice, double lambda_max, hs_model** out) {
  return guarded([&] {
    need(out, "out");
    *out = new hs_model{hs::scattering::build_from_double_cosets(lattice_of(lattice), lambda_max)};
  });
}

void hs_model_free(hs_model* model) { delete model; }

hs_status hs_model_info(const hs_model* model, int* d, int* kappa, double* a_gamma) {
  return guarded([&] {
    need(model, "model");
    if (d) *d = model->m.d;
    if (kappa) *kappa = model->m.kappa;
    if (a_gamma) *a_gamma = model->m.a_gamma;
  });
}

hs_status hs_phi_entry(const hs_model* model, int i, int j, double s_re, double s_im,
                       double* out_re, double* out_im, double* tail_bound) {
  return guarded([&] {
    need(model, "model");
    const int k = model->m.kappa;
    hs::require(i >= 0 && i < k && j >= 0 && j < k, hs::ErrorCode::invalid_argument,
                "entry index out of range");
    const auto pv = hs::scattering::phi_with_bound(model->m, {s_re, s_im});
    put(pv.value(i, j), out_re, out_im);
    if (tail_bound) *tail_bound = pv.tail_bound.size() ? pv.tail_bound(i, j) : 0.0;
  });
}

hs_status hs_determinant(const hs_model* model, double s_re, double s_im, double* out_re,
                         double* out_im) {
  return guarded([&] {
    need(model, "model");
    put(hs::scattering::scattering_determinant(model->m, {s_re, s_im}), out_re, out_im);
  });
}

hs_status hs_lstar(const hs_model* model, double s_re, double s_im, double* out_re,
                   double* out_im) {
  return guarded([&] {
    need(model, "model");
    put(hs::scattering::L_star(model->m, {s_re, s_im}), out_re, out_im);
  });
}

hs_status hs_functional_equation_residual(const hs_model* model, double s_re, double s_im,
                                          double* out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = hs::scattering::functional_equation_residual(model->m, {s_re, s_im});
  });
}

hs_status hs_zero_census(const hs_model* model, double T, hs_zero_list** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = new hs_zero_list{hs::census::lstar_census(model->m, T).zeros};
  });
}

size_t hs_zero_list_size(const hs_zero_list* list) { return list ? list->zeros.size() : 0; }

hs_status hs_zero_list_get(const hs_zero_list* list, size_t index, double* beta, double* gamma,
                           int* multiplicity) {
  return guarded([&] {
    need(list, "list");
    hs::require(index < list->zeros.size(), hs::ErrorCode::invalid_argument,
                "zero index out of range");
    const auto& z = list->zeros[index];
    if (beta) *beta = z.beta;
    if (gamma) *gamma = z.gamma;
    if (multiplicity) *multiplicity = z.multiplicity;
  });
}

void hs_zero_list_free(hs_zero_list* list) { delete list; }

hs_status hs_length_spectrum(const char* lattice, double L_max, hs_spectrum** out) {
  return guarded([&] {
    need(out, "out");
    *out = new hs_spectrum{hs::lengths::length_spectrum(lattice_of(lattice), L_max)};
  });
}

size_t hs_spectrum_size(const hs_spectrum* spectrum) {
  return spectrum ? spectrum->entries.size() : 0;
}

hs_status hs_spectrum_get(const hs_spectrum* spectrum, size_t index, double* length,
                          long long* multiplicity, long long* trace) {
  return guarded([&] {
    need(spectrum, "spectrum");
    hs::require(index < spectrum->entries.size(), hs::ErrorCode::invalid_argument,
                "spectrum index out of range");
    const auto& e = spectrum->entries[index];
    if (length) *length = e.length;
    if (multiplicity) *multiplicity = e.multiplicity;
    if (trace) *trace = e.trace;
  });
}

void hs_spectrum_free(hs_spectrum* spectrum) { delete spectrum; }

hs_status hs_run_command(const char* command, const char* const* keys, const char* const* values,
                         size_t count, hs_log_fn log, void* user, int* exit_code) {
  return guarded([&] {
    need(command, "command");
    need(exit_code, "exit_code");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (size_t i = 0; i < count; ++i) {
      need(keys[i], "key");
      need(values[i], "value");
      pairs.emplace_back(keys[i], values[i]);
    }
    const auto cfg = hs::drivers::RunConfig::from_pairs(pairs);
    *exit_code = hs::drivers::run_command(command, cfg, [&](const std::string& line) {
      if (log) log(line.c_str(), user);
    });
  });
}

}  // extern "C"
