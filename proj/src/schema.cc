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

#include "fieldmon/schema.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fieldmon/table.h"
#include "fieldmon/text.h"

namespace fieldmon {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::optional<double> ParseNumber(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value == 0 ? 0.0 : value;  // normalize -0
}

}  // namespace

std::string_view ValueKindName(ValueKind kind) {
  switch (kind) {
    case ValueKind::kString: return "string";
    case ValueKind::kPage: return "page";
    case ValueKind::kNumber: return "number";
    case ValueKind::kDate: return "date";
  }
  return "string";
}

std::optional<ValueKind> ParseValueKind(std::string_view name) {
  std::string lower = AsciiLower(Trim(name));
  if (lower == "string" || lower == "text") return ValueKind::kString;
  if (lower == "page") return ValueKind::kPage;
  if (lower == "number") return ValueKind::kNumber;
  if (lower == "date") return ValueKind::kDate;
  return std::nullopt;
}

Date Date::First() const {
  return has_day() ? *this : Date{year, 1, 1};
}

Date Date::Last() const {
  return has_day() ? *this : Date{year, 12, 31};
}

std::string Date::ToString() const {
  char buf[32];
  if (!has_day()) {
    std::snprintf(buf, sizeof(buf), "%04d", year);
  } else {
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  }
  return buf;
}

std::optional<Date> ParseDate(std::string_view text) {
  text = Trim(text);
  if (text.size() == 4 && AllDigits(text)) {
    return Date{static_cast<int>(*ParseInteger(text)), 0, 0};
  }
  if (text.size() != 10) return std::nullopt;
  char sep = text[4];
  if ((sep != '/' && sep != '-') || text[7] != sep) return std::nullopt;
  std::string_view y = text.substr(0, 4);
  std::string_view m = text.substr(5, 2);
  std::string_view d = text.substr(8, 2);
  if (!AllDigits(y) || !AllDigits(m) || !AllDigits(d)) return std::nullopt;
  Date date{static_cast<int>(*ParseInteger(y)), static_cast<int>(*ParseInteger(m)),
            static_cast<int>(*ParseInteger(d))};
  std::chrono::year_month_day ymd{std::chrono::year(date.year),
                                  std::chrono::month(static_cast<unsigned>(date.month)),
                                  std::chrono::day(static_cast<unsigned>(date.day))};
  if (!ymd.ok()) return std::nullopt;
  return date;
}

ValueKind KindOf(const Value &value) {
  switch (value.index()) {
    case 0: return ValueKind::kString;
    case 1: return ValueKind::kPage;
    case 2: return ValueKind::kNumber;
    default: return ValueKind::kDate;
  }
}

std::string ValueToString(const Value &value) {
  if (const auto *s = std::get_if<std::string>(&value)) return *s;
  if (const auto *p = std::get_if<PageName>(&value)) return p->Render();
  if (const auto *n = std::get_if<double>(&value)) return FormatNumber(*n);
  return std::get<Date>(value).ToString();
}

std::optional<Value> ParseValue(ValueKind kind, std::string_view raw) {
  raw = Trim(raw);
  if (raw.empty()) return std::nullopt;
  switch (kind) {
    case ValueKind::kString:
      return Value(std::string(raw));
    case ValueKind::kPage:
      if (auto page = PageName::Parse(raw)) return Value(*page);
      return std::nullopt;
    case ValueKind::kNumber:
      if (auto number = ParseNumber(raw)) return Value(*number);
      return std::nullopt;
    case ValueKind::kDate:
      if (auto date = ParseDate(raw)) return Value(*date);
      return std::nullopt;
  }
  return std::nullopt;
}

std::string AttributeKey(std::string_view name) {
  std::string folded = FoldCase(Trim(name));
  std::string out;
  out.reserve(folded.size());
  bool space = false;
  for (char c : folded) {
    if (c == '_' || c == ' ' || c == '\t') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return out;
}

Schema::Schema(std::vector<AttributeDecl> decls) : decls_(std::move(decls)) {
  for (size_t i = 0; i < decls_.size(); ++i) {
    auto [it, inserted] = index_.emplace(AttributeKey(decls_[i].name), i);
    if (!inserted) {
      throw std::invalid_argument("duplicate attribute in schema: " + decls_[i].name);
    }
  }
}

const AttributeDecl *Schema::Find(std::string_view attribute) const {
  auto it = index_.find(AttributeKey(attribute));
  return it == index_.end() ? nullptr : &decls_[it->second];
}

ValueKind Schema::KindFor(std::string_view attribute) const {
  const AttributeDecl *decl = Find(attribute);
  return decl == nullptr ? ValueKind::kString : decl->kind;
}

Schema Schema::FromTsv(std::string_view text) {
  std::vector<AttributeDecl> decls;
  for (const TsvRow &row : ReadTsv(text)) {
    if (row.fields.size() != 3) {
      throw std::runtime_error("schema line " + std::to_string(row.line) +
                               ": expected 3 columns (name, kind, multivalued)");
    }
    std::optional<ValueKind> kind = ParseValueKind(row.fields[1]);
    if (!kind.has_value()) {
      throw std::runtime_error("schema line " + std::to_string(row.line) +
                               ": unknown kind '" + row.fields[1] + "'");
    }
    std::optional<bool> multivalued = ParseBool(row.fields[2]);
    if (!multivalued.has_value()) {
      throw std::runtime_error("schema line " + std::to_string(row.line) +
                               ": multivalued must be true or false");
    }
    decls.push_back({row.fields[0], *kind, *multivalued});
  }
  try {
    return Schema(std::move(decls));
  } catch (const std::invalid_argument &e) {
    throw std::runtime_error(e.what());
  }
}

std::vector<Fact> BindFacts(const PageAst &ast, const Schema &schema, Diagnostics *diag) {
  std::vector<Fact> facts;
  for (const AstNode &node : ast.nodes) {
    if (const CategoryLink *link = node.As<CategoryLink>()) {
      facts.push_back(Fact{ast.name, std::string(kCategoryAttribute),
                           PageName(Namespace::kCategory, link->category)});
      continue;
    }
    const Annotation *annotation = node.As<Annotation>();
    if (annotation == nullptr) continue;
    const AttributeDecl *decl = schema.Find(annotation->attribute);
    ValueKind kind = decl == nullptr ? ValueKind::kString : decl->kind;
    std::optional<Value> value = ParseValue(kind, annotation->raw_value);
    if (!value.has_value()) {
      Warn(diag, WarningKind::kTypeMismatch,
           ast.name.Render() + ": '" + annotation->raw_value + "' is not a valid " +
               std::string(ValueKindName(kind)) + " for '" + annotation->attribute + "'");
      continue;
    }
    std::string attribute = decl == nullptr ? annotation->attribute : decl->name;
    facts.push_back(Fact{ast.name, std::move(attribute), std::move(*value)});
  }
  return facts;
}

}  // namespace fieldmon
