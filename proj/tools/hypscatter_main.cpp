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

// Command-line front end. All work goes through the C interface.
#include <CLI11.hpp>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "hypscatter/hypscatter.h"

namespace {

void print_line(const char* line, void*) {
  std::fputs(line, stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
}

struct Flag {
  const char* key;
  CLI::Option* option = nullptr;
  std::string value;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering determinants, zero distribution and length spectra of arithmetic lattices"};
  app.set_version_flag("--version", std::string(hs_version()));
  app.require_subcommand(1, 1);

  std::string config;
  bool freeze = false;
  std::vector<Flag> flags = {{"lattice"}, {"compare"},   {"tmax"},   {"lmax"},
                             {"lambda_max"}, {"precision"}, {"out"}, {"seed"},
                             {"a_max"},   {"perturbation"}, {"expected"}, {"cache"}};
  const std::vector<std::pair<const char*, const char*>> help = {
      {"--lattice", "SL2Z, Gamma0(p) or SL2ZiGaussian"},
      {"--compare", "second lattice for the length-spectrum comparison"},
      {"--tmax", "height of the zero census (<= 100)"},
      {"--lmax", "maximal geodesic length (<= 15)"},
      {"--lambda-max", "double-coset cutoff of the series model (0 skips it)"},
      {"--precision", "double or dd"},
      {"--out", "output directory"},
      {"--seed", "seed for random sample points"},
      {"--a-max", "rows of the Selberg-type product"},
      {"--perturbation", "single or pair"},
      {"--expected", "frozen-constant file"},
      {"--cache", "zeta-zero cache directory"}};

  const char* names[] = {"scattering", "zeros", "lengths", "verify"};
  const char* descriptions[] = {"scattering matrices, functional equation and bounds",
                                "zero census and distribution statistics",
                                "length spectra, zeta identities and perturbation lattice",
                                "run the acceptance suite"};
  for (int c = 0; c < 4; ++c) {
    auto* sub = app.add_subcommand(names[c], descriptions[c]);
    sub->add_option("--config", config, "flat key=value file, applied before flags");
    for (std::size_t i = 0; i < flags.size(); ++i) {
      auto* opt = sub->add_option(help[i].first, flags[i].value, help[i].second);
      // one option object per subcommand; remember whichever fired
      opt->each([&flags, i, opt](const std::string&) { flags[i].option = opt; });
    }
    if (std::string(names[c]) == "verify")
      sub->add_flag("--freeze", freeze, "store measured constants as the new frozen values");
  }

  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> keys, values;
  if (!config.empty()) {
    keys.emplace_back("config");
    values.push_back(config);
  }
  for (const auto& f : flags)
    if (f.option) {
      keys.emplace_back(f.key);
      values.push_back(f.value);
    }
  if (freeze) {
    keys.emplace_back("freeze");
    values.emplace_back("true");
  }
  std::vector<const char*> k, v;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    k.push_back(keys[i].c_str());
    v.push_back(values[i].c_str());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  int exit_code = 0;
  const hs_status st =
      hs_run_command(command.c_str(), k.data(), v.data(), k.size(), print_line, nullptr, &exit_code);
  if (st != HS_OK) {
    std::fprintf(stderr, "error: %s\n", hs_last_error());
    return st == HS_ERR_INVALID_ARGUMENT ? 2 : 3;
  }
  return exit_code;
}
