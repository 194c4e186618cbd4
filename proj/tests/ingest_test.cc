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

#include <filesystem>

#include "doctest.h"
#include "fieldmon/table.h"
#include "support/synth.h"

namespace fieldmon {
namespace {

namespace fs = std::filesystem;

const Date kReference{2014, 1, 1};

fs::path FixturePages() { return fs::path(FIELDMON_SOURCE_DIR) / "tests/fixtures/pages"; }

TEST_CASE("the transcribed page ingests to the expected record") {
  IngestResult result = IngestDirectory(FixturePages(), DefaultIngestConfig(kReference));
  CHECK(result.report.errors.empty());
  CHECK(result.report.page_count == 1);
  CHECK(result.report.template_count == 1);
  CHECK(result.report.skipped_count == 1);
  REQUIRE(result.corpus.size() == 1);
  const ProjectRecord *r = result.corpus.Find("20054886");
  REQUIRE(r != nullptr);
  CHECK(r->title == "Schule und Betrieb");
  CHECK(r->duration_from == Date{2004, 9, 15});
  CHECK(r->duration_to == Date{2005, 7, 15});
  CHECK(r->year_start == 2004);
  CHECK(r->year_end == 2005);
  CHECK(r->funding_types == FundingSet{FundingType::kThirdParty});
  CHECK(r->institution_count == 2);
  CHECK(r->persons.size() == 4);
  CHECK(r->keywords.size() == 4);
  CHECK(r->main_classification == "Erziehungswissenschaft");
  CHECK(r->disciplinary_area == DisciplinaryArea::kEducation);
  CHECK(r->country == Country::kDE);
  CHECK(r->status == ProjectStatus::kCompleted);
}

TEST_CASE("an empty directory gives an empty corpus") {
  fs::path dir = fs::temp_directory_path() / "fieldmon_ingest_empty";
  fs::create_directories(dir);
  IngestResult result = IngestDirectory(dir, DefaultIngestConfig(kReference));
  CHECK(result.corpus.size() == 0);
  CHECK(result.report.errors.empty());
  CHECK(result.corpus.summary() == CorpusSummary{});
  fs::remove_all(dir);
}

TEST_CASE("a missing directory is an error") {
  CHECK_THROWS(IngestDirectory("/nonexistent/fieldmon", DefaultIngestConfig(kReference)));
}

TEST_CASE("duplicate ids keep the first page") {
  std::vector<PageSource> pages = {
      {PageName(Namespace::kMain, "A"), "[[id::7]] [[Titel::first]]"},
      {PageName(Namespace::kMain, "B"), "[[id::7]] [[Titel::second]]"},
  };
  IngestResult result = IngestSources(pages, DefaultIngestConfig(kReference));
  REQUIRE(result.corpus.size() == 1);
  CHECK(result.corpus.Find("7")->title == "first");
  REQUIRE(result.report.errors.size() == 1);
  CHECK(result.report.errors[0].source == "B");
}

TEST_CASE("page file names round trip") {
  for (const PageName &name : {PageName(Namespace::kMain, "Schule und Betrieb"),
                               PageName(Namespace::kTemplate, "Laufzeit"),
                               PageName(Namespace::kCategory, "MoBi"),
                               PageName(Namespace::kMain, "Über/Unter")}) {
    CHECK(PageNameFromFile(PageFileName(name)) == name);
  }
  CHECK(PageFileName(PageName(Namespace::kMain, "Schule und Betrieb")) == "Schule%20und%20Betrieb.wiki");
  CHECK_FALSE(PageNameFromFile("notes.txt").has_value());
}

TEST_CASE("synthetic pages ingest back to their records") {
  testing::Rng rng(21);
  std::vector<ProjectRecord> expected;
  std::vector<PageSource> pages = {testing::DurationTemplatePage()};
  for (int i = 0; i < 200; ++i) {
    ProjectRecord r = testing::RandomPageRecord(rng, i);
    r.status = DeriveStatus(r, kReference);
    pages.push_back(testing::RecordPage(r));
    expected.push_back(r);
  }
  IngestResult result = IngestSources(pages, DefaultIngestConfig(kReference));
  CHECK(result.report.errors.empty());
  // Records carrying both thesis flags warn once each; nothing else warns.
  size_t conflicts = 0;
  for (const ProjectRecord &r : expected) {
    conflicts += r.research_types.count(ResearchTypeFlag::kDoctoralProject) &&
                 r.research_types.count(ResearchTypeFlag::kHabilitationProject);
  }
  CHECK(conflicts > 0);
  CHECK(result.report.diagnostics.Count(WarningKind::kQualificationConflict) == conflicts);
  CHECK(result.report.diagnostics.size() == conflicts);
  REQUIRE(result.corpus.size() == expected.size());
  for (const ProjectRecord &want : expected) {
    const ProjectRecord *got = result.corpus.Find(want.id);
    REQUIRE(got != nullptr);
    CHECK(*got == want);
  }
}

TEST_CASE("tabular import") {
  std::string tsv =
      "id\ttitle\tduration_from\tduration_to\tresearch_types\tmain_classification\tinstitutions\tcountry\n"
      "1\tEins\t2004-09-15\t2005-07-15\tthird_party_funded;doctoral_project\tErziehungswissenschaft\tA;B\tDE\n"
      "2\tZwei\t\t\t\tUnbekannt\t\tFR\n"
      "3\tDrei\tnot a date\t\t\t\t\t\n"
      "1\tDuplicate\t\t\t\t\t\t\n";
  IngestResult result = ImportTabular(tsv, DisciplineMap::FromTsv(DefaultDisciplinesTsv()), kReference);
  CHECK(result.corpus.size() == 2);
  CHECK(result.report.errors.size() == 2);
  const ProjectRecord *one = result.corpus.Find("1");
  REQUIRE(one != nullptr);
  CHECK(one->funding_types == FundingSet{FundingType::kThirdParty});
  CHECK(one->qualification == QualificationType::kDoctoral);
  CHECK(one->disciplinary_area == DisciplinaryArea::kEducation);
  CHECK(one->institution_count == 2);
  CHECK(one->status == ProjectStatus::kCompleted);
  const ProjectRecord *two = result.corpus.Find("2");
  CHECK_FALSE(two->disciplinary_area.has_value());
  CHECK(two->country == Country::kUnknown);
  CHECK_THROWS(ImportTabular("id\tcolour\n1\tred\n", DisciplineMap{}, kReference));
}

}  // namespace
}  // namespace fieldmon
