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

#ifndef FIELDMON_PAGE_NAME_H_
#define FIELDMON_PAGE_NAME_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace fieldmon {

enum class Namespace { kMain, kCategory, kAttribute, kTemplate };

// Canonical prefix for a namespace ("" for main).
std::string_view NamespacePrefix(Namespace ns);

// A wiki page title: namespace plus a trimmed, non-empty local name.
//
// The rendered form is "Category:Foo" / "Attribute:Foo" / "Template:Foo" or
// just "Foo" for the main namespace. Prefixes are matched case-insensitively
// and "Property:" is accepted as an alias of the attribute namespace.
class PageName {
 public:
  // Throws std::invalid_argument if the trimmed local name is empty.
  PageName(Namespace ns, std::string_view local_name);

  // Parses a rendered page name. Returns nullopt for blank input.
  static std::optional<PageName> Parse(std::string_view rendered);

  Namespace ns() const { return ns_; }
  const std::string &local_name() const { return local_name_; }

  std::string Render() const;

  auto operator<=>(const PageName &) const = default;

 private:
  Namespace ns_;
  std::string local_name_;
};

}  // namespace fieldmon

#endif  // FIELDMON_PAGE_NAME_H_
