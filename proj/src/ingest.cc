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

#include "fieldmon/ingest.h"

#include <algorithm>
#include <stdexcept>

#include "fieldmon/table.h"
#include "fieldmon/text.h"

namespace fieldmon {

namespace {

constexpr std::string_view kPageExtension = ".wiki";

void AddRecord(IngestResult &result, ProjectRecord record, const std::string &source) {
  try {
    if (!result.corpus.Insert(std::move(record))) {
      result.report.errors.push_back({source, "duplicate id; record rejected"});
    }
  } catch (const std::invalid_argument &e) {
    result.report.errors.push_back({source, e.what()});
  }
}

std::vector<std::string> SplitList(std::string_view cell) {
  std::vector<std::string> out;
  if (Trim(cell).empty()) return out;
  for (std::string_view item : Split(cell, ';')) {
    item = Trim(item);
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

std::optional<int> YearCell(std::string_view cell, const char *column) {
  if (Trim(cell).empty()) return std::nullopt;
  auto year = ParseInteger(cell);
  if (!year) throw std::runtime_error(std::string(column) + ": not a year");
  return static_cast<int>(*year);
}

std::optional<Date> DateCell(std::string_view cell, const char *column) {
  if (Trim(cell).empty()) return std::nullopt;
  auto date = ParseDate(cell);
  if (!date) throw std::runtime_error(std::string(column) + ": not a date");
  return date;
}

}  // namespace

IngestConfig DefaultIngestConfig(const Date &reference_date) {
  IngestConfig config;
  config.schema = Schema::FromTsv(DefaultSchemaTsv());
  config.rules = RulesFromTsv(DefaultRulesTsv());
  config.synonyms = FlagSynonyms::FromTsv(DefaultSynonymsTsv());
  config.fields = FieldMap::FromTsv(DefaultFieldsTsv());
  config.disciplines = DisciplineMap::FromTsv(DefaultDisciplinesTsv());
  config.reference_date = reference_date;
  return config;
}

std::string PageFileName(const PageName &name) {
  return PercentEncode(name.Render()) + std::string(kPageExtension);
}

std::optional<PageName> PageNameFromFile(const std::filesystem::path &path) {
  std::string file = path.filename().string();
  if (file.size() <= kPageExtension.size() ||
      file.compare(file.size() - kPageExtension.size(), kPageExtension.size(),
                   kPageExtension) != 0) {
    return std::nullopt;
  }
  file.resize(file.size() - kPageExtension.size());
  return PageName::Parse(PercentDecode(file));
}

AssembledRecord ProcessPage(const PageSource &page, const TemplateMap &templates,
                            const IngestConfig &config, Diagnostics *diag) {
  PageAst ast = ParsePage(page, diag);
  PageAst expanded = ExpandTemplates(ast, templates, config.max_depth, diag);
  std::vector<Fact> facts = BindFacts(expanded, config.schema, diag);
  std::vector<Fact> derived = DeriveFields(facts, config.rules, config.synonyms, diag);
  AssemblyContext context{&config.fields, &config.synonyms, &config.disciplines};
  return AssembleRecord(page.name, derived, context, config.reference_date, diag);
}

IngestResult IngestSources(const std::vector<PageSource> &pages, const IngestConfig &config) {
  IngestResult result;
  TemplateMap templates;
  for (const PageSource &page : pages) {
    if (page.name.ns() != Namespace::kTemplate) continue;
    templates[page.name.local_name()] = TemplateDefinition{page.name.local_name(), page.markup};
    ++result.report.template_count;
  }
  for (const PageSource &page : pages) {
    if (page.name.ns() == Namespace::kTemplate) continue;
    if (page.name.ns() != Namespace::kMain) {
      ++result.report.skipped_count;
      continue;
    }
    ++result.report.page_count;
    AssembledRecord assembled =
        ProcessPage(page, templates, config, &result.report.diagnostics);
    AddRecord(result, std::move(assembled.record), page.name.Render());
  }
  result.report.record_count = result.corpus.size();
  return result;
}

IngestResult IngestDirectory(const std::filesystem::path &dir, const IngestConfig &config) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == kPageExtension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<PageSource> pages;
  std::vector<IngestError> read_errors;
  std::map<std::string, std::string> seen;  // rendered name -> file
  for (const auto &file : files) {
    std::optional<PageName> name = PageNameFromFile(file);
    if (!name.has_value()) {
      read_errors.push_back({file.string(), "file name is not a page name"});
      continue;
    }
    auto [it, inserted] = seen.emplace(name->Render(), file.string());
    if (!inserted) {
      read_errors.push_back({file.string(), "page name already used by " + it->second});
      continue;
    }
    try {
      pages.push_back(PageSource{*name, ReadFile(file)});
    } catch (const std::exception &e) {
      read_errors.push_back({file.string(), e.what()});
    }
  }
  IngestResult result = IngestSources(pages, config);
  result.report.errors.insert(result.report.errors.begin(), read_errors.begin(),
                              read_errors.end());
  return result;
}

IngestResult ImportTabular(std::string_view tsv, const DisciplineMap &disciplines,
                           const Date &reference_date) {
  IngestResult result;
  std::vector<TsvRow> rows = ReadTsv(tsv);
  if (rows.empty()) return result;

  static const std::vector<std::string> kKnown = {
      "id",       "title",        "duration_from",       "duration_to",
      "year_start", "year_end",   "research_types",      "funding_types",
      "qualification", "main_classification", "disciplinary_area", "keywords",
      "institutions", "institution_count", "persons", "country", "status"};
  std::map<std::string, size_t> columns;
  for (size_t i = 0; i < rows[0].fields.size(); ++i) {
    const std::string &name = rows[0].fields[i];
    if (std::find(kKnown.begin(), kKnown.end(), name) == kKnown.end()) {
      throw std::runtime_error("tabular header: unknown column '" + name + "'");
    }
    columns[name] = i;
  }
  if (!columns.count("id")) throw std::runtime_error("tabular header: missing id column");

  for (size_t r = 1; r < rows.size(); ++r) {
    const TsvRow &row = rows[r];
    std::string source = "line " + std::to_string(row.line);
    auto cell = [&](const char *name) -> std::string_view {
      auto it = columns.find(name);
      if (it == columns.end() || it->second >= row.fields.size()) return {};
      return row.fields[it->second];
    };
    ++result.report.page_count;
    try {
      ProjectRecord record;
      record.id = std::string(cell("id"));
      record.title = cell("title").empty() ? record.id : std::string(cell("title"));
      record.duration_from = DateCell(cell("duration_from"), "duration_from");
      record.duration_to = DateCell(cell("duration_to"), "duration_to");
      record.year_start = YearCell(cell("year_start"), "year_start");
      record.year_end = YearCell(cell("year_end"), "year_end");
      for (const std::string &flag : SplitList(cell("research_types"))) {
        auto parsed = ParseFlagId(flag);
        if (!parsed) throw std::runtime_error("research_types: unknown flag '" + flag + "'");
        record.research_types.insert(*parsed);
      }
      record.funding_types = DeriveFunding(record.research_types);
      record.qualification =
          DeriveQualification(record.research_types, &result.report.diagnostics);
      record.main_classification = std::string(cell("main_classification"));
      if (!cell("disciplinary_area").empty()) {
        record.disciplinary_area = ParseAreaLabel(cell("disciplinary_area"));
        if (!record.disciplinary_area) throw std::runtime_error("disciplinary_area: unknown");
      } else if (!record.main_classification.empty()) {
        record.disciplinary_area = disciplines.Lookup(record.main_classification);
      }
      record.keywords = SplitList(cell("keywords"));
      record.institutions = SplitList(cell("institutions"));
      record.institution_count = static_cast<int>(record.institutions.size());
      record.persons = SplitList(cell("persons"));
      record.country = ParseCountry(cell("country"));
      if (!cell("status").empty()) {
        auto status = ParseStatus(cell("status"));
        if (!status) throw std::runtime_error("status: unknown value");
        record.status = *status;
      } else {
        record.status = DeriveStatus(record, reference_date);
      }
      AddRecord(result, std::move(record), source);
    } catch (const std::exception &e) {
      result.report.errors.push_back({source, e.what()});
    }
  }
  result.report.record_count = result.corpus.size();
  return result;
}

}  // namespace fieldmon
