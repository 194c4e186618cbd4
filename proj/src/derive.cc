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

#include "fieldmon/derive.h"

#include <cmath>
#include <stdexcept>

#include "fieldmon/table.h"
#include "fieldmon/text.h"

namespace fieldmon {

namespace {

constexpr std::string_view kFlagIds[] = {
    "contract_research", "third_party_funded", "in_house",
    "expertise",         "doctoral_project",   "habilitation_project",
    "other_exam_thesis", "other",              "unspecified",
};

constexpr std::string_view kFundingIds[] = {"in_house", "third_party", "contract"};
constexpr std::string_view kQualificationIds[] = {"doctoral", "habilitation"};

std::optional<int> YearOf(const Value &value) {
  if (const Date *date = std::get_if<Date>(&value)) return date->year;
  if (const double *number = std::get_if<double>(&value)) {
    if (std::floor(*number) == *number && std::abs(*number) < 1e6) {
      return static_cast<int>(*number);
    }
    return std::nullopt;
  }
  if (const std::string *text = std::get_if<std::string>(&value)) {
    if (auto date = ParseDate(*text)) return date->year;
  }
  return std::nullopt;
}

std::string FlagText(const Value &value) {
  if (const PageName *page = std::get_if<PageName>(&value)) return page->local_name();
  return ValueToString(value);
}

}  // namespace

std::string_view FlagId(ResearchTypeFlag flag) { return kFlagIds[static_cast<int>(flag)]; }

std::optional<ResearchTypeFlag> ParseFlagId(std::string_view id) {
  std::string lower = AsciiLower(Trim(id));
  for (ResearchTypeFlag flag : kAllResearchTypeFlags) {
    if (FlagId(flag) == lower) return flag;
  }
  return std::nullopt;
}

std::string_view FundingId(FundingType type) { return kFundingIds[static_cast<int>(type)]; }

std::optional<FundingType> ParseFundingId(std::string_view id) {
  for (FundingType type : kAllFundingTypes) {
    if (FundingId(type) == Trim(id)) return type;
  }
  return std::nullopt;
}

std::string_view QualificationId(QualificationType type) {
  return kQualificationIds[static_cast<int>(type)];
}

std::optional<QualificationType> ParseQualificationId(std::string_view id) {
  for (QualificationType type : kAllQualificationTypes) {
    if (QualificationId(type) == Trim(id)) return type;
  }
  return std::nullopt;
}

void FlagSynonyms::Add(std::string_view surface_form, ResearchTypeFlag flag) {
  entries_[FoldCase(Trim(surface_form))] = flag;
}

std::optional<ResearchTypeFlag> FlagSynonyms::Lookup(std::string_view surface_form) const {
  auto it = entries_.find(FoldCase(Trim(surface_form)));
  if (it != entries_.end()) return it->second;
  return ParseFlagId(surface_form);
}

ResearchTypeSet FlagSynonyms::Resolve(std::string_view raw, Diagnostics *diag) const {
  ResearchTypeSet flags;
  if (auto whole = Lookup(raw)) {
    flags.insert(*whole);
    return flags;
  }
  std::string normalized(raw);
  for (char &c : normalized) {
    if (c == ';') c = ',';
  }
  for (std::string_view member : Split(normalized, ',')) {
    member = Trim(member);
    if (member.empty()) continue;
    if (auto flag = Lookup(member)) {
      flags.insert(*flag);
    } else {
      Warn(diag, WarningKind::kUnknownResearchType,
           "unknown research type '" + std::string(member) + "'");
    }
  }
  return flags;
}

FlagSynonyms FlagSynonyms::FromTsv(std::string_view text) {
  FlagSynonyms synonyms;
  for (const TsvRow &row : ReadTsv(text)) {
    if (row.fields.size() != 2) {
      throw std::runtime_error("synonym line " + std::to_string(row.line) +
                               ": expected 2 columns (surface_form, flag)");
    }
    std::optional<ResearchTypeFlag> flag = ParseFlagId(row.fields[1]);
    if (!flag.has_value()) {
      throw std::runtime_error("synonym line " + std::to_string(row.line) +
                               ": unknown flag '" + row.fields[1] + "'");
    }
    synonyms.Add(row.fields[0], *flag);
  }
  return synonyms;
}

FundingSet DeriveFunding(const ResearchTypeSet &research_types) {
  FundingSet funding;
  if (research_types.count(ResearchTypeFlag::kInHouse)) funding.insert(FundingType::kInHouse);
  if (research_types.count(ResearchTypeFlag::kThirdPartyFunded)) {
    funding.insert(FundingType::kThirdParty);
  }
  if (research_types.count(ResearchTypeFlag::kContractResearch)) {
    funding.insert(FundingType::kContract);
  }
  return funding;
}

std::optional<QualificationType> DeriveQualification(const ResearchTypeSet &research_types,
                                                     Diagnostics *diag) {
  bool doctoral = research_types.count(ResearchTypeFlag::kDoctoralProject) > 0;
  bool habilitation = research_types.count(ResearchTypeFlag::kHabilitationProject) > 0;
  if (doctoral && habilitation) {
    Warn(diag, WarningKind::kQualificationConflict,
         "both doctoral and habilitation project flags set; counting as doctoral");
  }
  if (doctoral) return QualificationType::kDoctoral;
  if (habilitation) return QualificationType::kHabilitation;
  return std::nullopt;
}

std::string_view TransformName(Transform transform) {
  switch (transform) {
    case Transform::kYearOfDate: return "year_of_date";
    case Transform::kFundingMapping: return "funding_mapping";
    case Transform::kQualificationMapping: return "qualification_mapping";
    case Transform::kCountOfValues: return "count_of_values";
  }
  return "";
}

std::optional<Transform> ParseTransform(std::string_view name) {
  for (Transform t : {Transform::kYearOfDate, Transform::kFundingMapping,
                      Transform::kQualificationMapping, Transform::kCountOfValues}) {
    if (TransformName(t) == Trim(name)) return t;
  }
  return std::nullopt;
}

void ValidateRules(const std::vector<DerivationRule> &rules) {
  std::set<std::string> sources;
  for (const DerivationRule &rule : rules) sources.insert(AttributeKey(rule.source_attribute));
  for (const DerivationRule &rule : rules) {
    std::string target = AttributeKey(rule.target_attribute);
    if (target.empty() || AttributeKey(rule.source_attribute).empty()) {
      throw std::invalid_argument("derivation rule with an empty attribute name");
    }
    if (target == AttributeKey(rule.source_attribute)) {
      throw std::invalid_argument("rule derives '" + rule.target_attribute + "' from itself");
    }
    if (sources.count(target)) {
      throw std::invalid_argument("derived attribute '" + rule.target_attribute +
                                  "' is also used as a source");
    }
  }
}

std::vector<DerivationRule> RulesFromTsv(std::string_view text) {
  std::vector<DerivationRule> rules;
  for (const TsvRow &row : ReadTsv(text)) {
    if (row.fields.size() != 3) {
      throw std::runtime_error("rule line " + std::to_string(row.line) +
                               ": expected 3 columns (target, source, transform)");
    }
    std::optional<Transform> transform = ParseTransform(row.fields[2]);
    if (!transform.has_value()) {
      throw std::runtime_error("rule line " + std::to_string(row.line) +
                               ": unknown transform '" + row.fields[2] + "'");
    }
    rules.push_back({row.fields[0], row.fields[1], *transform});
  }
  try {
    ValidateRules(rules);
  } catch (const std::invalid_argument &e) {
    throw std::runtime_error(e.what());
  }
  return rules;
}

std::vector<Fact> DeriveFields(const std::vector<Fact> &facts,
                               const std::vector<DerivationRule> &rules,
                               const FlagSynonyms &synonyms, Diagnostics *diag) {
  ValidateRules(rules);
  std::vector<Fact> out = facts;

  // subject -> attribute key -> values
  std::map<PageName, std::map<std::string, std::vector<const Value *>>> by_subject;
  for (const Fact &fact : facts) {
    by_subject[fact.subject][AttributeKey(fact.attribute)].push_back(&fact.value);
  }

  for (const auto &[subject, attributes] : by_subject) {
    std::set<std::string> present;
    for (const auto &[key, values] : attributes) present.insert(key);

    for (const DerivationRule &rule : rules) {
      std::string target = AttributeKey(rule.target_attribute);
      if (present.count(target)) continue;
      auto source = attributes.find(AttributeKey(rule.source_attribute));
      if (source == attributes.end()) continue;
      const std::vector<const Value *> &values = source->second;

      std::vector<Value> derived;
      switch (rule.transform) {
        case Transform::kYearOfDate: {
          std::set<int> years;
          for (const Value *v : values) {
            if (auto year = YearOf(*v)) years.insert(*year);
          }
          for (int year : years) derived.emplace_back(static_cast<double>(year));
          break;
        }
        case Transform::kCountOfValues:
          derived.emplace_back(static_cast<double>(values.size()));
          break;
        case Transform::kFundingMapping:
        case Transform::kQualificationMapping: {
          ResearchTypeSet flags;
          for (const Value *v : values) flags.merge(synonyms.Resolve(FlagText(*v)));
          if (rule.transform == Transform::kFundingMapping) {
            for (FundingType type : DeriveFunding(flags)) {
              derived.emplace_back(std::string(FundingId(type)));
            }
          } else if (auto q = DeriveQualification(flags, diag)) {
            derived.emplace_back(std::string(QualificationId(*q)));
          }
          break;
        }
      }
      if (derived.empty()) continue;
      present.insert(target);
      for (Value &value : derived) {
        out.push_back(Fact{subject, rule.target_attribute, std::move(value)});
      }
    }
  }
  return out;
}

}  // namespace fieldmon
