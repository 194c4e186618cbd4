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

// Page directory -> corpus pipeline: parse, expand templates, bind facts,
// derive attributes, assemble records.

#ifndef FIELDMON_INGEST_H_
#define FIELDMON_INGEST_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fieldmon/corpus.h"
#include "fieldmon/derive.h"
#include "fieldmon/diagnostics.h"
#include "fieldmon/record.h"
#include "fieldmon/schema.h"
#include "fieldmon/wikitext.h"

namespace fieldmon {

struct IngestConfig {
  Schema schema;
  std::vector<DerivationRule> rules;
  FlagSynonyms synonyms;
  FieldMap fields;
  DisciplineMap disciplines;
  Date reference_date;
  int max_depth = kDefaultExpansionDepth;
};

// The shipped tables under config/, compiled in.
std::string_view DefaultSchemaTsv();
std::string_view DefaultRulesTsv();
std::string_view DefaultSynonymsTsv();
std::string_view DefaultFieldsTsv();
std::string_view DefaultDisciplinesTsv();

IngestConfig DefaultIngestConfig(const Date &reference_date);

struct IngestError {
  std::string source;  // file path or page name
  std::string message;
};

struct IngestReport {
  size_t page_count = 0;      // content pages processed
  size_t template_count = 0;  // template pages loaded
  size_t skipped_count = 0;   // category/attribute pages
  size_t record_count = 0;
  Diagnostics diagnostics;
  std::vector<IngestError> errors;
};

struct IngestResult {
  Corpus corpus;
  IngestReport report;
};

// Page file name <-> page name; files carry the ".wiki" extension.
std::string PageFileName(const PageName &name);
std::optional<PageName> PageNameFromFile(const std::filesystem::path &path);

// Runs the whole pipeline for one page; exposed for tests and tools.
AssembledRecord ProcessPage(const PageSource &page, const TemplateMap &templates,
                            const IngestConfig &config, Diagnostics *diag);

// Pages in the Template namespace become templates, other non-main pages are
// skipped, the rest become records. Later duplicates of an id are rejected.
IngestResult IngestSources(const std::vector<PageSource> &pages, const IngestConfig &config);

// Reads every *.wiki file under `dir` (sorted by file name). Unreadable files
// are reported as errors and skipped.
IngestResult IngestDirectory(const std::filesystem::path &dir, const IngestConfig &config);

// Wiki-bypass import. The first row names the columns (ProjectRecord field
// names); list fields use ';'. Funding and qualification are always derived
// from research_types; a missing disciplinary_area is looked up from
// main_classification and a missing status is derived from the dates.
IngestResult ImportTabular(std::string_view tsv, const DisciplineMap &disciplines,
                           const Date &reference_date);

}  // namespace fieldmon

#endif  // FIELDMON_INGEST_H_
