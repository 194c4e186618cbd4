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

#ifndef FIELDMON_RECORD_H_
#define FIELDMON_RECORD_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fieldmon/derive.h"
#include "fieldmon/diagnostics.h"
#include "fieldmon/schema.h"

namespace fieldmon {

enum class Country { kDE, kAT, kCH, kUnknown };
enum class ProjectStatus { kCompleted, kStarting, kCurrent };

std::string_view CountryId(Country country);
// Accepts ISO codes and German/English country names; anything else is
// unknown.
Country ParseCountry(std::string_view text);

std::string_view StatusId(ProjectStatus status);
std::optional<ProjectStatus> ParseStatus(std::string_view id);

enum class DisciplinaryArea {
  kSocialSciencesAndHumanities,
  kSociology,
  kPopulationScience,
  kPoliticalScience,
  kEducation,
  kPsychology,
  kCommunicationSciences,
  kEconomics,
  kSocialPolicy,
  kLabourMarketResearch,
  kInterdisciplinarySubjects,
  kHistory,
};

inline constexpr size_t kDisciplinaryAreaCount = 12;
const std::array<DisciplinaryArea, kDisciplinaryAreaCount> &AllDisciplinaryAreas();
std::string_view AreaLabel(DisciplinaryArea area);
std::optional<DisciplinaryArea> ParseAreaLabel(std::string_view label);

// Classification string -> disciplinary area, case-insensitive.
class DisciplineMap {
 public:
  void Add(std::string_view classification, DisciplinaryArea area);
  std::optional<DisciplinaryArea> Lookup(std::string_view classification) const;

  // True when every one of the 12 areas is the target of some entry.
  bool CoversAllAreas() const;

  const std::map<std::string, DisciplinaryArea> &entries() const { return entries_; }

  // Tab-separated `classification area_label`.
  static DisciplineMap FromTsv(std::string_view text);

 private:
  std::map<std::string, DisciplinaryArea> entries_;
};

struct ProjectRecord {
  std::string id;
  std::string title;
  std::optional<Date> duration_from;
  std::optional<Date> duration_to;
  std::optional<int> year_start;
  std::optional<int> year_end;
  ResearchTypeSet research_types;
  FundingSet funding_types;
  std::optional<QualificationType> qualification;
  std::string main_classification;
  std::optional<DisciplinaryArea> disciplinary_area;
  std::vector<std::string> keywords;
  std::vector<std::string> institutions;
  int institution_count = 0;
  std::vector<std::string> persons;
  Country country = Country::kUnknown;
  ProjectStatus status = ProjectStatus::kCurrent;

  bool operator==(const ProjectRecord &) const = default;
};

// Empty string when the record satisfies its invariants, otherwise a
// description of the first violation.
std::string CheckRecord(const ProjectRecord &record);

// completed if the project ended before `reference`, starting if it begins
// after it, current otherwise. Bare years are widened to the whole year;
// the years stand in for missing duration dates.
ProjectStatus DeriveStatus(const ProjectRecord &record, const Date &reference);

enum class RecordField {
  kId,
  kTitle,
  kDurationFrom,
  kDurationTo,
  kYearStart,
  kYearEnd,
  kResearchTypes,
  kMainClassification,
  kInstitutions,
  kPersons,
  kKeywords,
  kCountry,
};

std::string_view RecordFieldName(RecordField field);
std::optional<RecordField> ParseRecordField(std::string_view name);

// Wiki attribute -> record field. Several attributes may feed one field.
class FieldMap {
 public:
  void Add(std::string_view attribute, RecordField field);
  std::optional<RecordField> Lookup(std::string_view attribute) const;

  // Attribute spellings in insertion order, for the metadata endpoint.
  const std::vector<std::pair<std::string, RecordField>> &entries() const {
    return ordered_;
  }

  // Tab-separated `field attribute`.
  static FieldMap FromTsv(std::string_view text);

 private:
  std::map<std::string, RecordField> index_;
  std::vector<std::pair<std::string, RecordField>> ordered_;
};

struct AssemblyContext {
  const FieldMap *fields = nullptr;
  const FlagSynonyms *synonyms = nullptr;
  const DisciplineMap *disciplines = nullptr;
};

struct AssembledRecord {
  ProjectRecord record;
  // Facts whose attribute has no record field, as attribute -> values.
  std::map<std::string, std::vector<std::string>> unmapped;
};

// Builds one project record from the facts of one page.
AssembledRecord AssembleRecord(const PageName &page, const std::vector<Fact> &facts,
                               const AssemblyContext &context, const Date &reference_date,
                               Diagnostics *diag = nullptr);

}  // namespace fieldmon

#endif  // FIELDMON_RECORD_H_
