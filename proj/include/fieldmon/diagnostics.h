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

#ifndef FIELDMON_DIAGNOSTICS_H_
#define FIELDMON_DIAGNOSTICS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fieldmon {

// Recoverable problems found while processing a page. None of these abort
// processing; they are collected and summarized in the ingest report.
enum class WarningKind {
  kUnterminatedLink,
  kUnterminatedTransclusion,
  kUnknownTemplate,
  kDepthExceeded,
  kTypeMismatch,
  kUnknownResearchType,
  kQualificationConflict,
  kInconsistentDuration,
  kInvalidYear,
};

std::string_view WarningKindName(WarningKind kind);

struct Warning {
  WarningKind kind;
  std::string message;
};

// Append-only warning sink. Passed by pointer; a null sink discards.
class Diagnostics {
 public:
  void Add(WarningKind kind, std::string message) {
    warnings_.push_back({kind, std::move(message)});
  }

  const std::vector<Warning> &warnings() const { return warnings_; }
  size_t size() const { return warnings_.size(); }
  bool empty() const { return warnings_.empty(); }
  size_t Count(WarningKind kind) const;

  // Warning counts keyed by WarningKindName().
  std::map<std::string, size_t> CountsByKind() const;

  void Append(const Diagnostics &other);

 private:
  std::vector<Warning> warnings_;
};

inline void Warn(Diagnostics *diag, WarningKind kind, std::string message) {
  if (diag != nullptr) diag->Add(kind, std::move(message));
}

}  // namespace fieldmon

#endif  // FIELDMON_DIAGNOSTICS_H_
