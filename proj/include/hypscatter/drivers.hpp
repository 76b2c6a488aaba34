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
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypscatter/lattices.hpp"
#include "hypscatter/specfun.hpp"

namespace hs::drivers {

/// Desk budgets enforced by RunConfig::validate.
inline constexpr double kMaxT = 100.0;
inline constexpr double kMaxL = 15.0;
inline constexpr double kMaxLambda = 1e8;

struct RunConfig {
  lattices::LatticeId lattice;
  std::optional<lattices::LatticeId> compare;  // second lattice for DL/dl
  double T_max = 50.0;
  double L_max = 8.0;
  double lambda_max = 1e4;
  specfun::PrecisionProfile precision;
  std::filesystem::path out_dir = "out";
  std::filesystem::path cache_dir;  // default: <out>/cache
  std::filesystem::path expected_path;
  std::uint64_t seed = 1;
  int a_max = 3;
  std::string perturbation = "single";  // or "pair"
  bool freeze = false;

  /// Applies key=value pairs in order; a "config" key loads a flat
  /// key=value file at that point. Throws invalid_argument on unknown keys
  /// or malformed values.
  static RunConfig from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);
  void set(const std::string& key, const std::string& value);
  void load_file(const std::filesystem::path& path);

  void validate() const;
  std::filesystem::path cache() const;
};

using Log = std::function<void(const std::string&)>;

/// Each command writes CSV tables and <command>.json into out_dir and returns
/// 0, or 1 when an invariant check fails. Errors propagate as hs::Error.
int cmd_scattering(const RunConfig& cfg, const Log& log);
int cmd_zeros(const RunConfig& cfg, const Log& log);
int cmd_lengths(const RunConfig& cfg, const Log& log);
int cmd_verify(const RunConfig& cfg, const Log& log);

/// Dispatches on "scattering", "zeros", "lengths" or "verify".
int run_command(const std::string& name, const RunConfig& cfg, const Log& log);

std::string version();

}  // namespace hs::drivers
