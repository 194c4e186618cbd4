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

#include "fieldmon/record.h"

#include <cmath>
#include <stdexcept>

#include "fieldmon/table.h"
#include "fieldmon/text.h"

namespace fieldmon {

namespace {

constexpr std::string_view kAreaLabels[] = {
    "Social Sciences and Humanities",
    "Sociology",
    "Population Science",
    "Political Science",
    "Education",
    "Psychology",
    "Communication Sciences",
    "Economics",
    "Social Policy",
    "Labour market and occupational research",
    "Interdisciplinary Subjects",
    "History",
};

constexpr std::string_view kFieldNames[] = {
    "id",           "title",     "duration_from",       "duration_to",
    "year_start",   "year_end",  "research_types",      "main_classification",
    "institutions", "persons",   "keywords",            "country",
};

std::string TextOf(const Value &value) {
  if (const PageName *page = std::get_if<PageName>(&value)) return page->Render();
  return ValueToString(value);
}

std::optional<Date> DateOf(const Value &value) {
  if (const Date *date = std::get_if<Date>(&value)) return *date;
  if (const std::string *text = std::get_if<std::string>(&value)) return ParseDate(*text);
  return std::nullopt;
}

std::optional<int> WholeYear(const Value &value) {
  if (const double *number = std::get_if<double>(&value)) {
    if (std::floor(*number) == *number && *number >= 0 && *number < 10000) {
      return static_cast<int>(*number);
    }
    return std::nullopt;
  }
  if (const std::string *text = std::get_if<std::string>(&value)) {
    auto year = ParseInteger(*text);
    if (year && *year >= 0 && *year < 10000) return static_cast<int>(*year);
  }
  return std::nullopt;
}

}  // namespace

std::string_view CountryId(Country country) {
  switch (country) {
    case Country::kDE: return "DE";
    case Country::kAT: return "AT";
    case Country::kCH: return "CH";
    case Country::kUnknown: return "unknown";
  }
  return "unknown";
}

Country ParseCountry(std::string_view text) {
  std::string key = FoldCase(Trim(text));
  if (key == "de" || key == "deutschland" || key == "germany") return Country::kDE;
  if (key == "at" || key == "österreich" || key == "austria") return Country::kAT;
  if (key == "ch" || key == "schweiz" || key == "switzerland") return Country::kCH;
  return Country::kUnknown;
}

std::string_view StatusId(ProjectStatus status) {
  switch (status) {
    case ProjectStatus::kCompleted: return "completed";
    case ProjectStatus::kStarting: return "starting";
    case ProjectStatus::kCurrent: return "current";
  }
  return "current";
}

std::optional<ProjectStatus> ParseStatus(std::string_view id) {
  for (ProjectStatus s :
       {ProjectStatus::kCompleted, ProjectStatus::kStarting, ProjectStatus::kCurrent}) {
    if (StatusId(s) == Trim(id)) return s;
  }
  return std::nullopt;
}

const std::array<DisciplinaryArea, kDisciplinaryAreaCount> &AllDisciplinaryAreas() {
  static const std::array<DisciplinaryArea, kDisciplinaryAreaCount> areas = [] {
    std::array<DisciplinaryArea, kDisciplinaryAreaCount> a{};
    for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<DisciplinaryArea>(i);
    return a;
  }();
  return areas;
}

std::string_view AreaLabel(DisciplinaryArea area) { return kAreaLabels[static_cast<int>(area)]; }

std::optional<DisciplinaryArea> ParseAreaLabel(std::string_view label) {
  for (DisciplinaryArea area : AllDisciplinaryAreas()) {
    if (EqualsIgnoreCase(AreaLabel(area), Trim(label))) return area;
  }
  return std::nullopt;
}

void DisciplineMap::Add(std::string_view classification, DisciplinaryArea area) {
  entries_[FoldCase(Trim(classification))] = area;
}

std::optional<DisciplinaryArea> DisciplineMap::Lookup(std::string_view classification) const {
  auto it = entries_.find(FoldCase(Trim(classification)));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool DisciplineMap::CoversAllAreas() const {
  std::set<DisciplinaryArea> targets;
  for (const auto &[key, area] : entries_) targets.insert(area);
  return targets.size() == kDisciplinaryAreaCount;
}

DisciplineMap DisciplineMap::FromTsv(std::string_view text) {
  DisciplineMap map;
  for (const TsvRow &row : ReadTsv(text)) {
    if (row.fields.size() != 2) {
      throw std::runtime_error("discipline line " + std::to_string(row.line) +
                               ": expected 2 columns (classification, area)");
    }
    std::optional<DisciplinaryArea> area = ParseAreaLabel(row.fields[1]);
    if (!area.has_value()) {
      throw std::runtime_error("discipline line " + std::to_string(row.line) +
                               ": unknown area '" + row.fields[1] + "'");
    }
    map.Add(row.fields[0], *area);
  }
  return map;
}

std::string CheckRecord(const ProjectRecord &record) {
  if (Trim(record.id).empty()) return "empty id";
  if (record.duration_from && record.duration_to &&
      record.duration_from->First() > record.duration_to->Last()) {
    return "duration_from after duration_to";
  }
  if (record.year_start && record.year_end && *record.year_start > *record.year_end) {
    return "year_start after year_end";
  }
  if (!record.institutions.empty() &&
      record.institution_count != static_cast<int>(record.institutions.size())) {
    return "institution_count does not match institutions";
  }
  if (record.institution_count < 0) return "negative institution_count";
  return "";
}

ProjectStatus DeriveStatus(const ProjectRecord &record, const Date &reference) {
  std::optional<Date> end;
  if (record.duration_to) {
    end = record.duration_to->Last();
  } else if (record.year_end) {
    end = Date{*record.year_end, 12, 31};
  }
  std::optional<Date> start;
  if (record.duration_from) {
    start = record.duration_from->First();
  } else if (record.year_start) {
    start = Date{*record.year_start, 1, 1};
  }
  Date ref = reference.First();
  if (end && *end < ref) return ProjectStatus::kCompleted;
  if (start && *start > ref) return ProjectStatus::kStarting;
  return ProjectStatus::kCurrent;
}

std::string_view RecordFieldName(RecordField field) {
  return kFieldNames[static_cast<int>(field)];
}

std::optional<RecordField> ParseRecordField(std::string_view name) {
  for (size_t i = 0; i < std::size(kFieldNames); ++i) {
    if (kFieldNames[i] == Trim(name)) return static_cast<RecordField>(i);
  }
  return std::nullopt;
}

void FieldMap::Add(std::string_view attribute, RecordField field) {
  auto [it, inserted] = index_.insert_or_assign(AttributeKey(attribute), field);
  (void)it;
  if (inserted) ordered_.emplace_back(std::string(Trim(attribute)), field);
}

std::optional<RecordField> FieldMap::Lookup(std::string_view attribute) const {
  auto it = index_.find(AttributeKey(attribute));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FieldMap FieldMap::FromTsv(std::string_view text) {
  FieldMap map;
  for (const TsvRow &row : ReadTsv(text)) {
    if (row.fields.size() != 2) {
      throw std::runtime_error("field map line " + std::to_string(row.line) +
                               ": expected 2 columns (field, attribute)");
    }
    std::optional<RecordField> field = ParseRecordField(row.fields[0]);
    if (!field.has_value()) {
      throw std::runtime_error("field map line " + std::to_string(row.line) +
                               ": unknown record field '" + row.fields[0] + "'");
    }
    map.Add(row.fields[1], *field);
  }
  return map;
}

AssembledRecord AssembleRecord(const PageName &page, const std::vector<Fact> &facts,
                               const AssemblyContext &context, const Date &reference_date,
                               Diagnostics *diag) {
  if (context.fields == nullptr || context.synonyms == nullptr ||
      context.disciplines == nullptr) {
    throw std::invalid_argument("AssembleRecord needs fields, synonyms and disciplines");
  }
  AssembledRecord out;
  ProjectRecord &record = out.record;

  std::map<RecordField, std::vector<const Value *>> by_field;
  for (const Fact &fact : facts) {
    std::optional<RecordField> field = context.fields->Lookup(fact.attribute);
    if (field.has_value()) {
      by_field[*field].push_back(&fact.value);
    } else {
      out.unmapped[fact.attribute].push_back(TextOf(fact.value));
    }
  }
  auto first = [&](RecordField field) -> const Value * {
    auto it = by_field.find(field);
    return it == by_field.end() ? nullptr : it->second.front();
  };
  auto all = [&](RecordField field) {
    std::vector<std::string> values;
    auto it = by_field.find(field);
    if (it != by_field.end()) {
      for (const Value *v : it->second) values.push_back(TextOf(*v));
    }
    return values;
  };

  const Value *id = first(RecordField::kId);
  record.id = id != nullptr ? TextOf(*id) : page.Render();
  const Value *title = first(RecordField::kTitle);
  record.title = title != nullptr ? TextOf(*title) : page.Render();

  if (const Value *v = first(RecordField::kDurationFrom)) record.duration_from = DateOf(*v);
  if (const Value *v = first(RecordField::kDurationTo)) record.duration_to = DateOf(*v);
  for (RecordField field : {RecordField::kYearStart, RecordField::kYearEnd}) {
    const Value *v = first(field);
    if (v == nullptr) continue;
    std::optional<int> year = WholeYear(*v);
    if (!year.has_value()) {
      Warn(diag, WarningKind::kInvalidYear,
           page.Render() + ": '" + TextOf(*v) + "' is not a year for " +
               std::string(RecordFieldName(field)));
      continue;
    }
    (field == RecordField::kYearStart ? record.year_start : record.year_end) = year;
  }

  if (auto it = by_field.find(RecordField::kResearchTypes); it != by_field.end()) {
    for (const Value *v : it->second) {
      std::string text = std::holds_alternative<PageName>(*v)
                             ? std::get<PageName>(*v).local_name()
                             : ValueToString(*v);
      record.research_types.merge(context.synonyms->Resolve(text, diag));
    }
  }
  record.funding_types = DeriveFunding(record.research_types);
  record.qualification = DeriveQualification(record.research_types);

  if (const Value *v = first(RecordField::kMainClassification)) {
    record.main_classification = TextOf(*v);
    record.disciplinary_area = context.disciplines->Lookup(record.main_classification);
  }
  record.institutions = all(RecordField::kInstitutions);
  record.institution_count = static_cast<int>(record.institutions.size());
  record.persons = all(RecordField::kPersons);
  record.keywords = all(RecordField::kKeywords);
  if (const Value *v = first(RecordField::kCountry)) record.country = ParseCountry(TextOf(*v));

  if (record.duration_from && record.duration_to &&
      record.duration_from->First() > record.duration_to->Last()) {
    Warn(diag, WarningKind::kInconsistentDuration,
         page.Render() + ": duration starts after it ends; start dropped");
    record.duration_from.reset();
  }
  if (record.year_start && record.year_end && *record.year_start > *record.year_end) {
    Warn(diag, WarningKind::kInconsistentDuration,
         page.Render() + ": start year after end year; start year dropped");
    record.year_start.reset();
  }
  record.status = DeriveStatus(record, reference_date);
  return out;
}

}  // namespace fieldmon
