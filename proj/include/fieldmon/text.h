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

// Small string helpers shared by the parsers and table loaders.

#ifndef FIELDMON_TEXT_H_
#define FIELDMON_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fieldmon {

// Strips ASCII whitespace (space, tab, CR, LF, FF, VT) from both ends.
std::string_view Trim(std::string_view s);

// ASCII-only lowercase; bytes >= 0x80 pass through unchanged.
std::string AsciiLower(std::string_view s);

// Lowercases ASCII and the common Latin-1 umlauts (Ä Ö Ü) in UTF-8.
std::string FoldCase(std::string_view s);

bool EqualsIgnoreCase(std::string_view a, std::string_view b);

std::vector<std::string_view> Split(std::string_view s, char sep);

// Percent-encodes everything except RFC 3986 unreserved characters.
std::string PercentEncode(std::string_view s);

// Decodes %XX escapes; malformed escapes are kept literally.
std::string PercentDecode(std::string_view s);

std::optional<long long> ParseInteger(std::string_view s);

// Shortest round-trip decimal representation of a finite double.
std::string FormatNumber(double value);

// Fixed-point representation with the given number of decimals.
std::string FormatFixed(double value, int decimals);

}  // namespace fieldmon

#endif  // FIELDMON_TEXT_H_
