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

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace hs::expected {

/// A measured constant passes when it is at most this multiple of its frozen value.
inline constexpr double kRegressionFactor = 1.1;

/// Frozen constants of the boundedness checks, one number per key.
class Store {
 public:
  /// A missing file gives an empty store; a malformed one throws Error(io).
  static Store load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  std::optional<double> get(const std::string& key) const;
  void set(const std::string& key, double value) { values_[key] = value; }
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

struct Gate {
  std::string key;
  double measured = 0.0;
  double frozen = 0.0;
  bool present = false;
  bool pass = false;
};

/// measured <= kRegressionFactor * frozen; fails when the key is absent.
Gate check(const Store& store, const std::string& key, double measured);

/// data/expected.json of the source tree.
std::filesystem::path default_path();

}  // namespace hs::expected
