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

#include "hypscatter/expected.hpp"

#include <cmath>
#include <json.hpp>

#include "hypscatter/error.hpp"
#include "hypscatter/io.hpp"

#ifndef HS_DEFAULT_EXPECTED
#define HS_DEFAULT_EXPECTED "data/expected.json"
#endif

namespace hs::expected {

Store Store::load(const std::filesystem::path& path) {
  Store store;
  if (!std::filesystem::exists(path)) return store;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(io::read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io, "expected: cannot parse " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("constants") || !j["constants"].is_object())
    throw Error(ErrorCode::io, "expected: missing \"constants\" object in " + path.string());
  for (const auto& [key, value] : j["constants"].items()) {
    if (!value.is_number())
      throw Error(ErrorCode::io, "expected: non-numeric value for " + key);
    store.values_[key] = value.get<double>();
  }
  return store;
}

void Store::save(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["regression_factor"] = kRegressionFactor;
  j["constants"] = nlohmann::json::object();
  for (const auto& [key, value] : values_) j["constants"][key] = value;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  io::write_text_atomic(path, j.dump(2) + "\n");
}

std::optional<double> Store::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Gate check(const Store& store, const std::string& key, double measured) {
  Gate g;
  g.key = key;
  g.measured = measured;
  if (auto frozen = store.get(key)) {
    g.present = true;
    g.frozen = *frozen;
    g.pass = std::isfinite(measured) && measured <= kRegressionFactor * g.frozen;
  }
  return g;
}

std::filesystem::path default_path() { return HS_DEFAULT_EXPECTED; }

}  // namespace hs::expected
