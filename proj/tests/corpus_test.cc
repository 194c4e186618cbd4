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

#include "fieldmon/corpus.h"

#include <algorithm>
#include <filesystem>
#include <set>
#include <thread>

#include "doctest.h"
#include "fieldmon/ingest.h"
#include "fieldmon/table.h"
#include "support/oracle.h"
#include "support/synth.h"

namespace fieldmon {
namespace {

namespace fs = std::filesystem;

const Date kReference{2014, 1, 1};

struct Tables {
  FieldMap fields = FieldMap::FromTsv(DefaultFieldsTsv());
  FlagSynonyms synonyms = FlagSynonyms::FromTsv(DefaultSynonymsTsv());
  DisciplineMap disciplines = DisciplineMap::FromTsv(DefaultDisciplinesTsv());
  AssemblyContext context{&fields, &synonyms, &disciplines};
};

ProjectRecord Record(std::string id) {
  ProjectRecord r;
  r.id = std::move(id);
  r.title = r.id;
  return r;
}

fs::path TempPath(const std::string &name) {
  return fs::temp_directory_path() / ("fieldmon_corpus_test_" + name);
}

TEST_CASE("zero facts give an empty current record named after the page") {
  Tables t;
  PageName page(Namespace::kMain, "Leere Seite");
  AssembledRecord a = AssembleRecord(page, {}, t.context, kReference);
  CHECK(a.record.id == "Leere Seite");
  CHECK(a.record.title == "Leere Seite");
  CHECK_FALSE(a.record.duration_from.has_value());
  CHECK_FALSE(a.record.year_end.has_value());
  CHECK_FALSE(a.record.disciplinary_area.has_value());
  CHECK(a.record.funding_types.empty());
  CHECK(a.record.country == Country::kUnknown);
  CHECK(a.record.status == ProjectStatus::kCurrent);
  CHECK(a.unmapped.empty());
}

TEST_CASE("record assembled from facts") {
  Tables t;
  PageName page(Namespace::kMain, "Schule und Betrieb");
  std::vector<Fact> facts = {
      {page, "Erfassungsnr.", std::string("20054886")},
      {page, "Laufzeit Von", Date{2004, 9, 15}},
      {page, "Laufzeit Bis", Date{2005, 7, 15}},
      {page, "Jahrgang start", 2004.0},
      {page, "Jahrgang ende", 2005.0},
      {page, "Forschungsart", std::string("gefördert")},
      {page, "Forschungseinrichtung", std::string("A")},
      {page, "Forschungseinrichtung", std::string("B")},
      {page, "Hauptklassifikationsuch", std::string("Erziehungswissenschaft")},
      {page, "Methode", std::string("anwendungsorientiert")},
      {page, "Land", std::string("Deutschland")},
  };
  Diagnostics diag;
  AssembledRecord a = AssembleRecord(page, facts, t.context, kReference, &diag);
  const ProjectRecord &r = a.record;
  CHECK(r.id == "20054886");
  CHECK(r.title == "Schule und Betrieb");
  CHECK(r.year_start == 2004);
  CHECK(r.year_end == 2005);
  CHECK(r.research_types == ResearchTypeSet{ResearchTypeFlag::kThirdPartyFunded});
  CHECK(r.funding_types == FundingSet{FundingType::kThirdParty});
  CHECK_FALSE(r.qualification.has_value());
  CHECK(r.institution_count == 2);
  CHECK(r.disciplinary_area == DisciplinaryArea::kEducation);
  CHECK(r.country == Country::kDE);
  CHECK(r.status == ProjectStatus::kCompleted);
  CHECK(a.unmapped.at("Methode") == std::vector<std::string>{"anwendungsorientiert"});
  CHECK(diag.empty());
  CHECK(CheckRecord(r).empty());
}

TEST_CASE("status against the reference date") {
  ProjectRecord r = Record("x");
  r.duration_from = Date{2030, 1, 1};
  CHECK(DeriveStatus(r, kReference) == ProjectStatus::kStarting);
  r = Record("x");
  r.duration_from = Date{2010, 1, 1};
  r.duration_to = Date{2013, 12, 31};
  CHECK(DeriveStatus(r, kReference) == ProjectStatus::kCompleted);
  r.duration_to = Date{2014, 1, 1};
  CHECK(DeriveStatus(r, kReference) == ProjectStatus::kCurrent);
  r.duration_from = Date{2014, 1, 2};
  r.duration_to.reset();
  CHECK(DeriveStatus(r, kReference) == ProjectStatus::kStarting);
}

TEST_CASE("status falls back to years and widens bare years") {
  ProjectRecord r = Record("x");
  r.year_end = 2013;
  CHECK(DeriveStatus(r, kReference) == ProjectStatus::kCompleted);
  r.year_end = 2014;
  CHECK(DeriveStatus(r, kReference) == ProjectStatus::kCurrent);
  r = Record("x");
  r.duration_to = Date{2013, 0, 0};
  CHECK(DeriveStatus(r, kReference) == ProjectStatus::kCompleted);
  r.duration_to = Date{2014, 0, 0};
  CHECK(DeriveStatus(r, kReference) == ProjectStatus::kCurrent);
  r = Record("x");
  r.year_start = 2015;
  CHECK(DeriveStatus(r, kReference) == ProjectStatus::kStarting);
}

TEST_CASE("inconsistent durations drop the start with a warning") {
  Tables t;
  PageName page(Namespace::kMain, "P");
  Diagnostics diag;
  AssembledRecord a = AssembleRecord(
      page, {{page, "Laufzeit Von", Date{2006, 1, 1}}, {page, "Laufzeit Bis", Date{2005, 1, 1}}},
      t.context, kReference, &diag);
  CHECK_FALSE(a.record.duration_from.has_value());
  CHECK(a.record.duration_to == Date{2005, 1, 1});
  CHECK(diag.Count(WarningKind::kInconsistentDuration) == 1);
  CHECK(CheckRecord(a.record).empty());
}

TEST_CASE("country codes") {
  CHECK(ParseCountry("DE") == Country::kDE);
  CHECK(ParseCountry("Österreich") == Country::kAT);
  CHECK(ParseCountry("ch") == Country::kCH);
  CHECK(ParseCountry("Frankreich") == Country::kUnknown);
}

TEST_CASE("record invariants") {
  ProjectRecord r = Record("x");
  CHECK(CheckRecord(r).empty());
  r.id = " ";
  CHECK_FALSE(CheckRecord(r).empty());
  r = Record("x");
  r.year_start = 2006;
  r.year_end = 2005;
  CHECK_FALSE(CheckRecord(r).empty());
  r = Record("x");
  r.institutions = {"a", "b"};
  r.institution_count = 1;
  CHECK_FALSE(CheckRecord(r).empty());
}

TEST_CASE("discipline table covers the twelve areas") {
  DisciplineMap map = DisciplineMap::FromTsv(DefaultDisciplinesTsv());
  CHECK(map.CoversAllAreas());
  CHECK(map.Lookup("Erziehungswissenschaft") == DisciplinaryArea::kEducation);
  CHECK(map.Lookup("psychologie") == DisciplinaryArea::kPsychology);
  CHECK(map.Lookup("History") == DisciplinaryArea::kHistory);
  CHECK_FALSE(map.Lookup("Unbekanntes Fachgebiet").has_value());
  CHECK(AllDisciplinaryAreas().size() == 12);
  for (DisciplinaryArea area : AllDisciplinaryAreas()) CHECK(ParseAreaLabel(AreaLabel(area)) == area);
}

TEST_CASE("field map covers the documented attributes") {
  FieldMap map = FieldMap::FromTsv(DefaultFieldsTsv());
  CHECK(map.Lookup("id") == RecordField::kId);
  CHECK(map.Lookup("Erfassungsnr.") == RecordField::kId);
  CHECK(map.Lookup("Laufzeit Von") == RecordField::kDurationFrom);
  CHECK(map.Lookup("Laufzeit Bis") == RecordField::kDurationTo);
  CHECK(map.Lookup("Jahrgang start") == RecordField::kYearStart);
  CHECK(map.Lookup("Jahrgang ende") == RecordField::kYearEnd);
  CHECK(map.Lookup("Forschungsart") == RecordField::kResearchTypes);
  CHECK(map.Lookup("Hauptklassifikationsuch") == RecordField::kMainClassification);
  CHECK(map.Lookup("Forschungseinrichtung") == RecordField::kInstitutions);
  CHECK(map.Lookup("Personen") == RecordField::kPersons);
  CHECK(map.Lookup("Schlagwörter") == RecordField::kKeywords);
  CHECK(map.Lookup("Land") == RecordField::kCountry);
}

TEST_CASE("corpus insert and summary") {
  Corpus corpus;
  CHECK(corpus.summary().record_count == 0);
  CHECK_FALSE(corpus.summary().min_year_end.has_value());
  ProjectRecord a = Record("b");
  a.year_end = 2005;
  ProjectRecord b = Record("a");
  b.year_end = 1999;
  CHECK(corpus.Insert(a));
  CHECK(corpus.Insert(b));
  CHECK(corpus.Insert(Record("c")));
  CHECK_FALSE(corpus.Insert(Record("a")));
  CHECK(corpus.size() == 3);
  CHECK(corpus.summary() == CorpusSummary{3, 1999, 2005});
  ProjectRecord bad = Record("d");
  bad.year_start = 2010;
  bad.year_end = 2000;
  CHECK_THROWS_AS(corpus.Insert(bad), std::invalid_argument);
  CHECK(corpus.size() == 3);
  CHECK(corpus.Find("b")->year_end == 2005);
  CHECK(corpus.Find("zz") == nullptr);
}

TEST_CASE("filters") {
  Corpus corpus;
  ProjectRecord de = Record("20054886");
  de.year_end = 2005;
  de.country = Country::kDE;
  de.status = ProjectStatus::kCompleted;
  ProjectRecord at = Record("1");
  at.year_end = 2005;
  at.country = Country::kAT;
  at.status = ProjectStatus::kCompleted;
  ProjectRecord undated = Record("2");
  undated.country = Country::kDE;
  undated.status = ProjectStatus::kCurrent;
  corpus.Insert(de);
  corpus.Insert(at);
  corpus.Insert(undated);

  CorpusFilter f;
  f.status = ProjectStatus::kCompleted;
  f.region = Region::kGermany;
  std::vector<const ProjectRecord *> got = FilterRecords(corpus, f);
  REQUIRE(got.size() == 1);
  CHECK(got[0]->id == "20054886");

  std::vector<const ProjectRecord *> all = FilterRecords(corpus, CorpusFilter{});
  REQUIRE(all.size() == 3);
  CHECK(all[0]->id == "1");
  CHECK(all[1]->id == "2");
  CHECK(all[2]->id == "20054886");

  CorpusFilter bounded;
  bounded.year_from = 2000;
  CHECK(FilterRecords(corpus, bounded).size() == 2);

  CorpusFilter reversed;
  reversed.year_from = 2004;
  reversed.year_to = 2000;
  CHECK_THROWS_AS(FilterRecords(corpus, reversed), std::invalid_argument);
}

TEST_CASE("filtering a synthetic corpus matches a linear scan") {
  Corpus corpus = testing::RandomCorpus(1000, 1000);
  CorpusFilter f;
  f.status = ProjectStatus::kCompleted;
  f.region = Region::kGermany;
  f.year_from = 1995;
  f.year_to = 2009;
  std::set<std::string> got;
  std::string previous;
  for (const ProjectRecord *r : FilterRecords(corpus, f)) {
    CHECK(r->id > previous);
    previous = r->id;
    got.insert(r->id);
  }
  CHECK(got == testing::OracleSelect(corpus, f));
  CHECK_FALSE(got.empty());
}

TEST_CASE("region and year slices nest") {
  Corpus corpus = testing::RandomCorpus(7, 400);
  testing::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    CorpusFilter f = testing::RandomFilter(rng);
    CorpusFilter dach = f;
    dach.region = Region::kDach;
    CorpusFilter germany = f;
    germany.region = Region::kGermany;
    std::set<std::string> d, g;
    for (const ProjectRecord *r : FilterRecords(corpus, dach)) d.insert(r->id);
    for (const ProjectRecord *r : FilterRecords(corpus, germany)) g.insert(r->id);
    CHECK(std::includes(d.begin(), d.end(), g.begin(), g.end()));
  }
}

TEST_CASE("sha-256") {
  CHECK(Sha256Hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(Sha256Hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("serialization round trip") {
  Corpus corpus = testing::RandomCorpus(3, 300);
  std::string text = SerializeCorpus(corpus);
  CHECK(text.rfind("{\"format\":\"fieldmon-corpus\",\"record_count\":300,\"version\":1}\n", 0) == 0);
  Corpus back = DeserializeCorpus(text);
  CHECK(back.records() == corpus.records());
  CHECK(back.summary() == corpus.summary());
  CHECK(SerializeCorpus(back) == text);
}

TEST_CASE("deserialization rejects damaged files") {
  Corpus corpus = testing::RandomCorpus(4, 3);
  std::string text = SerializeCorpus(corpus);
  CHECK_THROWS(DeserializeCorpus(""));
  CHECK_THROWS(DeserializeCorpus("{\"format\":\"other\",\"record_count\":0,\"version\":1}\n"));
  CHECK_THROWS(DeserializeCorpus(text.substr(0, text.size() - 20)));
  std::string wrong_count = text;
  wrong_count.replace(wrong_count.find("\"record_count\":3"), 16, "\"record_count\":4");
  CHECK_THROWS(DeserializeCorpus(wrong_count));
  CHECK_THROWS(DeserializeCorpus(text + text.substr(text.find('\n') + 1)));
}

TEST_CASE("snapshot id is the hash of the file") {
  Corpus corpus = testing::RandomCorpus(5, 20);
  fs::path path = TempPath("snapshot.jsonl");
  SaveCorpus(corpus, path);
  std::shared_ptr<const Snapshot> snap = LoadSnapshot(path);
  CHECK(snap->id == Sha256Hex(ReadFile(path)));
  CHECK(snap->id == MakeSnapshot(corpus)->id);
  CHECK(snap->corpus.records() == corpus.records());
  fs::remove(path);
}

TEST_CASE("published snapshots do not disturb readers") {
  auto store = std::make_shared<SnapshotStore>(MakeSnapshot(testing::RandomCorpus(1, 50)));
  std::shared_ptr<const Snapshot> held = store->Get();
  std::vector<std::string> before;
  for (const ProjectRecord *r : FilterRecords(held->corpus, CorpusFilter{})) before.push_back(r->id);

  std::thread writer([&] {
    for (int i = 0; i < 20; ++i) store->Publish(MakeSnapshot(testing::RandomCorpus(100 + i, 80)));
  });
  std::thread reader([&] {
    for (int i = 0; i < 200; ++i) {
      std::shared_ptr<const Snapshot> s = store->Get();
      CHECK((s->corpus.size() == 50 || s->corpus.size() == 80));
    }
  });
  writer.join();
  reader.join();

  std::vector<std::string> after;
  for (const ProjectRecord *r : FilterRecords(held->corpus, CorpusFilter{})) after.push_back(r->id);
  CHECK(before == after);
  CHECK(store->Get()->corpus.size() == 80);
}

}  // namespace
}  // namespace fieldmon
