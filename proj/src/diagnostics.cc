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

#include "fieldmon/diagnostics.h"

namespace fieldmon {

std::string_view WarningKindName(WarningKind kind) {
  switch (kind) {
    case WarningKind::kUnterminatedLink: return "unterminated_link";
    case WarningKind::kUnterminatedTransclusion: return "unterminated_transclusion";
    case WarningKind::kUnknownTemplate: return "unknown_template";
    case WarningKind::kDepthExceeded: return "depth_exceeded";
    case WarningKind::kTypeMismatch: return "type_mismatch";
    case WarningKind::kUnknownResearchType: return "unknown_research_type";
    case WarningKind::kQualificationConflict: return "qualification_conflict";
    case WarningKind::kInconsistentDuration: return "inconsistent_duration";
    case WarningKind::kInvalidYear: return "invalid_year";
  }
  return "unknown";
}

size_t Diagnostics::Count(WarningKind kind) const {
  size_t n = 0;
  for (const Warning &w : warnings_) {
    if (w.kind == kind) ++n;
  }
  return n;
}

std::map<std::string, size_t> Diagnostics::CountsByKind() const {
  std::map<std::string, size_t> counts;
  for (const Warning &w : warnings_) ++counts[std::string(WarningKindName(w.kind))];
  return counts;
}

void Diagnostics::Append(const Diagnostics &other) {
  warnings_.insert(warnings_.end(), other.warnings_.begin(), other.warnings_.end());
}

}  // namespace fieldmon
