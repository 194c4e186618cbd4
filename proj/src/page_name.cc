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

#include "fieldmon/page_name.h"

#include <stdexcept>

#include "fieldmon/text.h"

namespace fieldmon {

namespace {

std::optional<Namespace> NamespaceFromPrefix(std::string_view prefix) {
  std::string lower = AsciiLower(Trim(prefix));
  if (lower == "category") return Namespace::kCategory;
  if (lower == "attribute" || lower == "property") return Namespace::kAttribute;
  if (lower == "template") return Namespace::kTemplate;
  return std::nullopt;
}

}  // namespace

std::string_view NamespacePrefix(Namespace ns) {
  switch (ns) {
    case Namespace::kMain: return "";
    case Namespace::kCategory: return "Category";
    case Namespace::kAttribute: return "Attribute";
    case Namespace::kTemplate: return "Template";
  }
  return "";
}

PageName::PageName(Namespace ns, std::string_view local_name)
    : ns_(ns), local_name_(Trim(local_name)) {
  if (local_name_.empty()) {
    throw std::invalid_argument("page name has an empty local part");
  }
  size_t colon = local_name_.find(':');
  if (ns_ == Namespace::kMain && colon != std::string::npos &&
      NamespaceFromPrefix(std::string_view(local_name_).substr(0, colon))) {
    throw std::invalid_argument("main-namespace name uses a reserved prefix: " +
                                local_name_);
  }
}

std::optional<PageName> PageName::Parse(std::string_view rendered) {
  rendered = Trim(rendered);
  if (rendered.empty()) return std::nullopt;
  size_t colon = rendered.find(':');
  if (colon != std::string_view::npos) {
    std::optional<Namespace> ns = NamespaceFromPrefix(rendered.substr(0, colon));
    std::string_view rest = Trim(rendered.substr(colon + 1));
    if (ns.has_value()) {
      if (rest.empty()) return std::nullopt;
      return PageName(*ns, rest);
    }
  }
  return PageName(Namespace::kMain, rendered);
}

std::string PageName::Render() const {
  if (ns_ == Namespace::kMain) return local_name_;
  std::string out(NamespacePrefix(ns_));
  out += ':';
  out += local_name_;
  return out;
}

}  // namespace fieldmon
