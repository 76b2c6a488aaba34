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
#include <string>
#include <vector>

namespace hs::io {

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_text(const std::filesystem::path& path);

/// Fixed-precision scientific rendering used by every CSV/JSON writer so that
/// output is byte-identical across runs.
std::string fmt_double(double x, int digits = 12);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Parses comma-separated text (no quoting). Throws Error(io) on ragged rows.
CsvTable parse_csv(const std::string& text);

/// Builds a CSV document from a header and numeric rows.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows, int digits = 12);

/// Parses a double with std::from_chars; throws Error(io) on garbage.
double parse_double(const std::string& s);

}  // namespace hs::io
