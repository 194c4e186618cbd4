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

// Parser for the semantic-wiki subset used by project pages:
//
//   [[Category: Name]]              category assignment
//   [[attribute::value]]            typed annotation
//   [[attribute::value|display]]    annotation with display override
//   {{Template:Name|a|key=b}}       transclusion ("Template:" is optional)
//
// Everything else, including plain [[links]], is kept as text. The parse is
// lossless: the node source spans tile the markup exactly.

#ifndef FIELDMON_WIKITEXT_H_
#define FIELDMON_WIKITEXT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fieldmon/diagnostics.h"
#include "fieldmon/page_name.h"

namespace fieldmon {

inline constexpr int kDefaultExpansionDepth = 8;

struct PageSource {
  PageName name;
  std::string markup;
};

// Half-open byte range [begin, end) into PageAst::markup.
struct SourceSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool operator==(const SourceSpan &) const = default;
};

struct TextRun {
  std::string text;
  bool operator==(const TextRun &) const = default;
};

struct CategoryLink {
  std::string category;
  bool operator==(const CategoryLink &) const = default;
};

struct Annotation {
  std::string attribute;
  std::string raw_value;
  std::optional<std::string> display_override;
  bool operator==(const Annotation &) const = default;
};

struct Transclusion {
  std::string template_name;
  // Positional arguments are keyed "1", "2", ... in call order.
  std::vector<std::pair<std::string, std::string>> arguments;

  // Last binding wins, as in MediaWiki.
  const std::string *FindArgument(std::string_view name) const;

  bool operator==(const Transclusion &) const = default;
};

struct AstNode {
  std::variant<TextRun, CategoryLink, Annotation, Transclusion> value;
  SourceSpan span;

  template <typename T>
  const T *As() const { return std::get_if<T>(&value); }

  bool operator==(const AstNode &) const = default;
};

// A parsed page. `markup` is the text the spans index into; for an expanded
// AST it is the expanded markup, so the lossless property holds for every
// PageAst regardless of how it was produced.
struct PageAst {
  PageName name;
  std::string markup;
  std::vector<AstNode> nodes;

  std::string_view SourceOf(const AstNode &node) const {
    return std::string_view(markup).substr(node.span.begin, node.span.size());
  }

  bool operator==(const PageAst &) const = default;
};

struct TemplateDefinition {
  std::string name;
  std::string body;
};

using TemplateMap = std::map<std::string, TemplateDefinition, std::less<>>;

// Never fails: malformed constructs become text and are reported to `diag`.
PageAst ParsePage(const PageSource &source, Diagnostics *diag = nullptr);

// Replaces {{{name}}} / {{{name|default}}} placeholders in a template body.
// Unbound placeholders without a default are left as literal text.
std::string SubstituteParameters(std::string_view body, const Transclusion &call);

// Normalizes a transclusion target to a template key: strips an optional
// "Template:" prefix and surrounding whitespace.
std::string TemplateKey(std::string_view target);

// Expands transclusions recursively up to `max_depth` layers. Unknown
// templates and transclusions beyond the depth limit become literal text.
// Throws std::invalid_argument if max_depth < 1.
PageAst ExpandTemplates(const PageAst &ast, const TemplateMap &templates,
                        int max_depth = kDefaultExpansionDepth,
                        Diagnostics *diag = nullptr);

}  // namespace fieldmon

#endif  // FIELDMON_WIKITEXT_H_
