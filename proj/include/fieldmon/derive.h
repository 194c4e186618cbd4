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

// Research-type vocabulary and the rules that derive indicator attributes
// (completion year, funding type, qualification, counters) from source facts.

#ifndef FIELDMON_DERIVE_H_
#define FIELDMON_DERIVE_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fieldmon/diagnostics.h"
#include "fieldmon/schema.h"

namespace fieldmon {

enum class ResearchTypeFlag {
  kContractResearch,
  kThirdPartyFunded,
  kInHouse,
  kExpertise,
  kDoctoralProject,
  kHabilitationProject,
  kOtherExamThesis,
  kOther,
  kUnspecified,
};

inline constexpr std::array<ResearchTypeFlag, 9> kAllResearchTypeFlags = {
    ResearchTypeFlag::kContractResearch,    ResearchTypeFlag::kThirdPartyFunded,
    ResearchTypeFlag::kInHouse,             ResearchTypeFlag::kExpertise,
    ResearchTypeFlag::kDoctoralProject,     ResearchTypeFlag::kHabilitationProject,
    ResearchTypeFlag::kOtherExamThesis,     ResearchTypeFlag::kOther,
    ResearchTypeFlag::kUnspecified,
};

enum class FundingType { kInHouse, kThirdParty, kContract };

inline constexpr std::array<FundingType, 3> kAllFundingTypes = {
    FundingType::kInHouse, FundingType::kThirdParty, FundingType::kContract};

enum class QualificationType { kDoctoral, kHabilitation };

inline constexpr std::array<QualificationType, 2> kAllQualificationTypes = {
    QualificationType::kDoctoral, QualificationType::kHabilitation};

using ResearchTypeSet = std::set<ResearchTypeFlag>;
using FundingSet = std::set<FundingType>;

std::string_view FlagId(ResearchTypeFlag flag);
std::optional<ResearchTypeFlag> ParseFlagId(std::string_view id);
std::string_view FundingId(FundingType type);
std::optional<FundingType> ParseFundingId(std::string_view id);
std::string_view QualificationId(QualificationType type);
std::optional<QualificationType> ParseQualificationId(std::string_view id);

// Surface form -> flag, matched case-insensitively. Canonical flag ids always
// resolve even when absent from the table.
class FlagSynonyms {
 public:
  FlagSynonyms() = default;

  void Add(std::string_view surface_form, ResearchTypeFlag flag);
  std::optional<ResearchTypeFlag> Lookup(std::string_view surface_form) const;

  // Resolves a raw research-type value. Lists separated by ',' or ';' are
  // split into their members. Unknown members are reported and skipped.
  ResearchTypeSet Resolve(std::string_view raw, Diagnostics *diag = nullptr) const;

  const std::map<std::string, ResearchTypeFlag> &entries() const { return entries_; }

  // Tab-separated `surface_form flag`.
  static FlagSynonyms FromTsv(std::string_view text);

 private:
  std::map<std::string, ResearchTypeFlag> entries_;
};

// Institutional, third-party and contract research each follow their one
// source flag; every other flag contributes nothing.
FundingSet DeriveFunding(const ResearchTypeSet &research_types);

// Doctoral wins over habilitation when both are present (with a warning).
std::optional<QualificationType> DeriveQualification(const ResearchTypeSet &research_types,
                                                     Diagnostics *diag = nullptr);

enum class Transform { kYearOfDate, kFundingMapping, kQualificationMapping, kCountOfValues };

std::string_view TransformName(Transform transform);
std::optional<Transform> ParseTransform(std::string_view name);

struct DerivationRule {
  std::string target_attribute;
  std::string source_attribute;
  Transform transform;
};

// Throws std::invalid_argument if a rule derives an attribute from itself or
// if any target also appears as a source.
void ValidateRules(const std::vector<DerivationRule> &rules);

// Tab-separated `target source transform`; validated.
std::vector<DerivationRule> RulesFromTsv(std::string_view text);

// Returns `facts` followed by the derived facts, subject by subject. A rule
// never adds a fact for an attribute the subject already carries, and a
// missing source simply produces nothing. The derived part depends only on
// the multiset of input facts, not on their order.
std::vector<Fact> DeriveFields(const std::vector<Fact> &facts,
                               const std::vector<DerivationRule> &rules,
                               const FlagSynonyms &synonyms, Diagnostics *diag = nullptr);

}  // namespace fieldmon

#endif  // FIELDMON_DERIVE_H_
