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

// Typed attribute declarations and binding of raw annotations to facts.

#ifndef FIELDMON_SCHEMA_H_
#define FIELDMON_SCHEMA_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fieldmon/diagnostics.h"
#include "fieldmon/page_name.h"
#include "fieldmon/wikitext.h"

namespace fieldmon {

enum class ValueKind { kString, kPage, kNumber, kDate };

std::string_view ValueKindName(ValueKind kind);
std::optional<ValueKind> ParseValueKind(std::string_view name);

// Calendar date with optional month/day precision. A bare year has month
// and day 0. Ordering compares (year, month, day) lexicographically, so a
// bare year sorts before any full date in that year.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  bool has_day() const { return month != 0; }

  // Earliest and latest full dates this value may denote.
  Date First() const;
  Date Last() const;

  // "YYYY-MM-DD", or "YYYY" for a bare year.
  std::string ToString() const;

  auto operator<=>(const Date &) const = default;
};

// Accepts YYYY/MM/DD, YYYY-MM-DD and bare YYYY. Rejects impossible dates.
std::optional<Date> ParseDate(std::string_view text);

using Value = std::variant<std::string, PageName, double, Date>;

ValueKind KindOf(const Value &value);

// Canonical text form; ParseValue(KindOf(v), ValueToString(v)) == v.
std::string ValueToString(const Value &value);

// Parses a raw annotation value under a declared kind. Empty values never
// parse.
std::optional<Value> ParseValue(ValueKind kind, std::string_view raw);

// Attribute names are matched case-insensitively with '_' treated as a
// space and internal whitespace collapsed, as in the wiki.
std::string AttributeKey(std::string_view name);

inline constexpr std::string_view kCategoryAttribute = "category";

struct AttributeDecl {
  std::string name;
  ValueKind kind = ValueKind::kString;
  bool multivalued = false;
};

struct Fact {
  PageName subject;
  std::string attribute;
  Value value;

  auto operator<=>(const Fact &) const = default;
};

class Schema {
 public:
  Schema() = default;
  // Throws std::invalid_argument on duplicate attribute names.
  explicit Schema(std::vector<AttributeDecl> decls);

  // Undeclared attributes resolve to nullptr (and bind as strings).
  const AttributeDecl *Find(std::string_view attribute) const;
  ValueKind KindFor(std::string_view attribute) const;

  const std::vector<AttributeDecl> &decls() const { return decls_; }

  // Tab-separated `name kind multivalued`; '#' starts a comment line.
  // Throws std::runtime_error with the line number on malformed input.
  static Schema FromTsv(std::string_view text);

 private:
  std::vector<AttributeDecl> decls_;
  std::map<std::string, size_t> index_;
};

// Turns the annotations and category links of an (expanded) page into typed
// facts. Values that do not parse under the declared kind are dropped with
// exactly one type-mismatch warning each.
std::vector<Fact> BindFacts(const PageAst &ast, const Schema &schema,
                            Diagnostics *diag = nullptr);

}  // namespace fieldmon

#endif  // FIELDMON_SCHEMA_H_
