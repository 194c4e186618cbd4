// Copyright 2026 The fieldmon Authors.
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

#ifndef FIELDMON_TABLE_H_
#define FIELDMON_TABLE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fieldmon {

struct TsvRow {
  size_t line = 0;  // 1-based
  std::vector<std::string> fields;
};

// Splits tab-separated text into trimmed fields. Blank lines and lines
// whose first non-blank character is '#' are skipped.
std::vector<TsvRow> ReadTsv(std::string_view text);

std::optional<bool> ParseBool(std::string_view text);

// Reads a whole file. Throws std::runtime_error naming the path on failure.
std::string ReadFile(const std::filesystem::path &path);

// Writes via a temporary sibling and renames it into place.
void WriteFileAtomically(const std::filesystem::path &path, std::string_view contents);

}  // namespace fieldmon

#endif  // FIELDMON_TABLE_H_
