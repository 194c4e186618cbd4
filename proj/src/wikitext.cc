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

#include "fieldmon/wikitext.h"

#include <stdexcept>

#include "fieldmon/text.h"

namespace fieldmon {

namespace {

bool StartsWith(std::string_view s, size_t pos, std::string_view token) {
  return s.compare(pos, token.size(), token) == 0;
}

// Finds the end (one past the closing braces) of a brace construct opening
// at `start` with `open` braces (2 for a transclusion, 3 for a parameter).
// Nested "{{{"/"}}}" and "{{"/"}}" pairs are matched with a stack.
std::optional<size_t> MatchBraces(std::string_view s, size_t start, int open) {
  std::vector<int> stack = {open};
  size_t j = start + open;
  while (j < s.size()) {
    if (StartsWith(s, j, "{{{")) {
      stack.push_back(3);
      j += 3;
    } else if (StartsWith(s, j, "{{")) {
      stack.push_back(2);
      j += 2;
    } else if (stack.back() == 3 && StartsWith(s, j, "}}}")) {
      stack.pop_back();
      j += 3;
    } else if (stack.back() == 2 && StartsWith(s, j, "}}")) {
      stack.pop_back();
      j += 2;
    } else {
      ++j;
    }
    if (stack.empty()) return j;
  }
  return std::nullopt;
}

// Splits on `sep` occurring outside nested {{ }} and [[ ]] pairs.
std::vector<std::string_view> SplitTopLevel(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int braces = 0;
  int brackets = 0;
  size_t start = 0;
  for (size_t j = 0; j < s.size(); ++j) {
    if (StartsWith(s, j, "{{")) {
      ++braces;
      ++j;
    } else if (braces > 0 && StartsWith(s, j, "}}")) {
      --braces;
      ++j;
    } else if (StartsWith(s, j, "[[")) {
      ++brackets;
      ++j;
    } else if (brackets > 0 && StartsWith(s, j, "]]")) {
      --brackets;
      ++j;
    } else if (s[j] == sep && braces == 0 && brackets == 0) {
      parts.push_back(s.substr(start, j - start));
      start = j + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

size_t FindTopLevel(std::string_view s, char sep) {
  std::vector<std::string_view> parts = SplitTopLevel(s, sep);
  return parts.size() == 1 ? std::string_view::npos : parts[0].size();
}

class Parser {
 public:
  Parser(std::string_view markup, Diagnostics *diag) : markup_(markup), diag_(diag) {}

  std::vector<AstNode> Run() {
    size_t i = 0;
    while (i < markup_.size()) {
      if (StartsWith(markup_, i, "[[")) {
        i = ParseLink(i);
      } else if (StartsWith(markup_, i, "{{{")) {
        // A bare parameter placeholder outside a template body is text.
        std::optional<size_t> end = MatchBraces(markup_, i, 3);
        i = end.has_value() ? *end : i + 1;
      } else if (StartsWith(markup_, i, "{{")) {
        i = ParseTransclusion(i);
      } else {
        ++i;
      }
    }
    FlushText(markup_.size());
    return std::move(nodes_);
  }

 private:
  size_t ParseLink(size_t start) {
    size_t end = std::string_view::npos;
    for (size_t j = start + 2; j + 1 < markup_.size(); ++j) {
      if (markup_[j] == '\n' || StartsWith(markup_, j, "[[")) break;
      if (StartsWith(markup_, j, "]]")) {
        end = j;
        break;
      }
    }
    if (end == std::string_view::npos) {
      Warn(diag_, WarningKind::kUnterminatedLink,
           "unterminated '[[' at byte " + std::to_string(start));
      return start + 2;
    }
    std::string_view content = markup_.substr(start + 2, end - start - 2);
    size_t close = end + 2;

    size_t separator = content.find("::");
    if (separator != std::string_view::npos) {
      std::string_view attribute = Trim(content.substr(0, separator));
      std::string_view rest = content.substr(separator + 2);
      if (attribute.empty()) return close;
      Annotation annotation;
      annotation.attribute = std::string(attribute);
      size_t bar = FindTopLevel(rest, '|');
      if (bar == std::string_view::npos) {
        annotation.raw_value = std::string(Trim(rest));
      } else {
        annotation.raw_value = std::string(Trim(rest.substr(0, bar)));
        annotation.display_override = std::string(Trim(rest.substr(bar + 1)));
      }
      Emit(std::move(annotation), start, close);
      return close;
    }

    size_t colon = content.find(':');
    if (colon != std::string_view::npos &&
        EqualsIgnoreCase(Trim(content.substr(0, colon)), "category")) {
      std::string_view rest = content.substr(colon + 1);
      // "[[Category:Name|sort key]]": the sort key is not part of the name.
      std::string_view category = Trim(rest.substr(0, rest.find('|')));
      if (!category.empty()) Emit(CategoryLink{std::string(category)}, start, close);
    }
    return close;
  }

  size_t ParseTransclusion(size_t start) {
    std::optional<size_t> end = MatchBraces(markup_, start, 2);
    if (!end.has_value()) {
      Warn(diag_, WarningKind::kUnterminatedTransclusion,
           "unterminated '{{' at byte " + std::to_string(start));
      return start + 2;
    }
    std::string_view content = markup_.substr(start + 2, *end - start - 4);
    std::vector<std::string_view> parts = SplitTopLevel(content, '|');
    Transclusion call;
    call.template_name = TemplateKey(parts[0]);
    if (call.template_name.empty() ||
        call.template_name.find_first_of("\n{}[]") != std::string::npos) {
      return *end;
    }
    int position = 1;
    for (size_t k = 1; k < parts.size(); ++k) {
      std::string_view part = parts[k];
      size_t eq = FindTopLevel(part, '=');
      if (eq != std::string_view::npos && !Trim(part.substr(0, eq)).empty()) {
        call.arguments.emplace_back(std::string(Trim(part.substr(0, eq))),
                                    std::string(Trim(part.substr(eq + 1))));
      } else {
        call.arguments.emplace_back(std::to_string(position++), std::string(part));
      }
    }
    Emit(std::move(call), start, *end);
    return *end;
  }

  template <typename T>
  void Emit(T value, size_t begin, size_t end) {
    FlushText(begin);
    nodes_.push_back(AstNode{std::move(value), SourceSpan{begin, end}});
    text_start_ = end;
  }

  void FlushText(size_t upto) {
    if (upto > text_start_) {
      std::string text(markup_.substr(text_start_, upto - text_start_));
      nodes_.push_back(AstNode{TextRun{std::move(text)}, SourceSpan{text_start_, upto}});
    }
    text_start_ = upto;
  }

  std::string_view markup_;
  Diagnostics *diag_;
  std::vector<AstNode> nodes_;
  size_t text_start_ = 0;
};

// Accumulates nodes into a fresh markup buffer, merging adjacent text.
class AstBuilder {
 public:
  void AppendText(std::string_view text) {
    if (text.empty()) return;
    size_t begin = markup_.size();
    markup_ += text;
    if (!nodes_.empty()) {
      AstNode &last = nodes_.back();
      if (auto *run = std::get_if<TextRun>(&last.value)) {
        run->text += text;
        last.span.end = markup_.size();
        return;
      }
    }
    nodes_.push_back(AstNode{TextRun{std::string(text)}, SourceSpan{begin, markup_.size()}});
  }

  void AppendNode(const AstNode &node, std::string_view source) {
    if (const TextRun *run = node.As<TextRun>()) {
      AppendText(run->text);
      return;
    }
    size_t begin = markup_.size();
    markup_ += source;
    nodes_.push_back(AstNode{node.value, SourceSpan{begin, markup_.size()}});
  }

  void AppendAll(const PageAst &ast) {
    for (const AstNode &node : ast.nodes) AppendNode(node, ast.SourceOf(node));
  }

  PageAst Finish(const PageName &name) {
    return PageAst{name, std::move(markup_), std::move(nodes_)};
  }

 private:
  std::string markup_;
  std::vector<AstNode> nodes_;
};

PageAst ExpandLayer(const PageAst &ast, const TemplateMap &templates, int remaining,
                    Diagnostics *diag) {
  AstBuilder builder;
  for (const AstNode &node : ast.nodes) {
    const Transclusion *call = node.As<Transclusion>();
    if (call == nullptr) {
      builder.AppendNode(node, ast.SourceOf(node));
      continue;
    }
    auto it = templates.find(call->template_name);
    if (it == templates.end()) {
      Warn(diag, WarningKind::kUnknownTemplate,
           "unknown template '" + call->template_name + "' on " + ast.name.Render());
      builder.AppendText(ast.SourceOf(node));
      continue;
    }
    if (remaining == 0) {
      Warn(diag, WarningKind::kDepthExceeded,
           "expansion depth exceeded at template '" + call->template_name + "' on " +
               ast.name.Render());
      builder.AppendText(ast.SourceOf(node));
      continue;
    }
    PageSource body{PageName(Namespace::kTemplate, it->second.name),
                    SubstituteParameters(it->second.body, *call)};
    PageAst parsed = ParsePage(body, diag);
    builder.AppendAll(ExpandLayer(parsed, templates, remaining - 1, diag));
  }
  return builder.Finish(ast.name);
}

}  // namespace

const std::string *Transclusion::FindArgument(std::string_view name) const {
  const std::string *found = nullptr;
  for (const auto &[key, value] : arguments) {
    if (key == name) found = &value;
  }
  return found;
}

PageAst ParsePage(const PageSource &source, Diagnostics *diag) {
  Parser parser(source.markup, diag);
  return PageAst{source.name, source.markup, parser.Run()};
}

std::string TemplateKey(std::string_view target) {
  target = Trim(target);
  size_t colon = target.find(':');
  if (colon != std::string_view::npos &&
      EqualsIgnoreCase(Trim(target.substr(0, colon)), "template")) {
    target = Trim(target.substr(colon + 1));
  }
  return std::string(target);
}

std::string SubstituteParameters(std::string_view body, const Transclusion &call) {
  std::string out;
  out.reserve(body.size());
  size_t i = 0;
  while (i < body.size()) {
    if (!StartsWith(body, i, "{{{")) {
      out.push_back(body[i++]);
      continue;
    }
    std::optional<size_t> end = MatchBraces(body, i, 3);
    if (!end.has_value()) {
      out.push_back(body[i++]);
      continue;
    }
    std::string_view inner = body.substr(i + 3, *end - i - 6);
    size_t bar = FindTopLevel(inner, '|');
    std::string_view name = Trim(inner.substr(0, bar));
    if (const std::string *value = call.FindArgument(name)) {
      out += *value;
    } else if (bar != std::string_view::npos) {
      out += SubstituteParameters(inner.substr(bar + 1), call);
    } else {
      out += body.substr(i, *end - i);
    }
    i = *end;
  }
  return out;
}

PageAst ExpandTemplates(const PageAst &ast, const TemplateMap &templates, int max_depth,
                        Diagnostics *diag) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
  return ExpandLayer(ast, templates, max_depth, diag);
}

}  // namespace fieldmon
