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

#include "support/synth.h"

#include <cstdio>
#include <set>
#include <stdexcept>

#include "support/oracle.h"

namespace fieldmon::testing {

namespace {

const std::vector<std::string> kFlagIds = {
    "contract_research", "third_party_funded",  "in_house",
    "expertise",         "doctoral_project",    "habilitation_project",
    "other_exam_thesis", "other",               "unspecified",
};

// Surface forms written into synthetic pages, indexed like kFlagIds.
const std::vector<std::string> kFlagSurfaces = {
    "Auftragsforschung", "gefördert",    "Eigenprojekt",
    "Gutachten",         "Dissertation", "Habilitation",
    "Other exam thesis", "Other",        "keine Angabe",
};

// Area expected for each entry of SyntheticClassifications(); "" = none.
const std::vector<std::string> kExpectedArea = {
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
    "Education",
    "Psychology",
    "",
    "",
};

int Uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Chance(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string Id(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "P%06d", index);
  return buf;
}

std::string Slash(const Date &d) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d/%02d/%02d", d.year, d.month, d.day);
  return buf;
}

Date RandomDay(Rng &rng, int year) { return Date{year, Uniform(rng, 1, 12), Uniform(rng, 1, 28)}; }

void FillResearchTypes(Rng &rng, ProjectRecord &r) {
  std::set<std::string> ids;
  for (const std::string &id : kFlagIds) {
    if (Chance(rng, 0.2)) ids.insert(id);
  }
  for (const std::string &id : ids) r.research_types.insert(*ParseFlagId(id));
  for (const std::string &id : OracleFunding(ids)) r.funding_types.insert(*ParseFundingId(id));
  if (ids.count("doctoral_project")) {
    r.qualification = QualificationType::kDoctoral;
  } else if (ids.count("habilitation_project")) {
    r.qualification = QualificationType::kHabilitation;
  }
}

void FillLists(Rng &rng, ProjectRecord &r) {
  int institutions = Uniform(rng, 0, 3);
  for (int i = 0; i < institutions; ++i) {
    r.institutions.push_back("Institut " + std::to_string(Uniform(rng, 1, 40)) + " (Ort " +
                             std::to_string(i) + ")");
  }
  r.institution_count = static_cast<int>(r.institutions.size());
  int persons = Uniform(rng, 0, 3);
  for (int i = 0; i < persons; ++i) r.persons.push_back("Person " + std::to_string(Uniform(rng, 1, 500)));
  int keywords = Uniform(rng, 0, 4);
  for (int i = 0; i < keywords; ++i) r.keywords.push_back("Thema " + std::to_string(Uniform(rng, 1, 60)));
}

Country RandomCountry(Rng &rng) {
  int roll = Uniform(rng, 0, 19);
  if (roll < 10) return Country::kDE;
  if (roll < 14) return Country::kAT;
  if (roll < 17) return Country::kCH;
  return Country::kUnknown;
}

}  // namespace

const std::vector<std::string> &SyntheticClassifications() {
  static const std::vector<std::string> kValues = {
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
      "Erziehungswissenschaft",
      "Psychologie",
      "Unbekanntes Fachgebiet",
      "",
  };
  return kValues;
}

ProjectRecord RandomRecord(Rng &rng, int index) {
  ProjectRecord r;
  r.id = Id(index);
  r.title = "Synthetic project " + std::to_string(index);
  if (Chance(rng, 0.85)) {
    r.year_end = Uniform(rng, 1990, 2012);
    if (Chance(rng, 0.8)) r.year_start = *r.year_end - Uniform(rng, 0, 4);
  } else if (Chance(rng, 0.5)) {
    r.year_start = Uniform(rng, 1990, 2012);
  }
  if (r.year_start && Chance(rng, 0.7)) r.duration_from = Date{*r.year_start, 1, Uniform(rng, 1, 28)};
  if (r.year_end && Chance(rng, 0.7)) r.duration_to = Date{*r.year_end, 12, Uniform(rng, 1, 28)};
  FillResearchTypes(rng, r);

  const auto &classes = SyntheticClassifications();
  size_t pick = static_cast<size_t>(Uniform(rng, 0, static_cast<int>(classes.size()) - 1));
  r.main_classification = classes[pick];
  if (!kExpectedArea[pick].empty()) {
    r.disciplinary_area = ParseAreaLabel(kExpectedArea[pick]);
  } else if (r.main_classification.empty() && Chance(rng, 0.5)) {
    r.disciplinary_area = AllDisciplinaryAreas()[static_cast<size_t>(Uniform(rng, 0, 11))];
  }
  FillLists(rng, r);
  r.country = RandomCountry(rng);
  r.status = static_cast<ProjectStatus>(Uniform(rng, 0, 2));
  return r;
}

Corpus RandomCorpus(uint64_t seed, int size) {
  Rng rng(seed);
  Corpus corpus;
  for (int i = 0; i < size; ++i) {
    if (!corpus.Insert(RandomRecord(rng, i))) throw std::logic_error("duplicate synthetic id");
  }
  return corpus;
}

CorpusFilter RandomFilter(Rng &rng) {
  CorpusFilter f;
  int status = Uniform(rng, 0, 3);
  if (status < 3) f.status = static_cast<ProjectStatus>(status);
  f.region = Chance(rng, 0.5) ? Region::kGermany : Region::kDach;
  if (Chance(rng, 0.5)) f.year_from = Uniform(rng, 1988, 2014);
  if (Chance(rng, 0.5)) f.year_to = Uniform(rng, 1988, 2014);
  if (f.year_from && f.year_to && *f.year_from > *f.year_to) std::swap(f.year_from, f.year_to);
  return f;
}

std::vector<CorpusFilter> StandardFilters() {
  using S = ProjectStatus;
  using R = Region;
  auto make = [](std::optional<S> s, R r, std::optional<int> from, std::optional<int> to) {
    CorpusFilter f;
    f.status = s;
    f.region = r;
    f.year_from = from;
    f.year_to = to;
    return f;
  };
  return {
      make(std::nullopt, R::kDach, std::nullopt, std::nullopt),
      make(std::nullopt, R::kGermany, std::nullopt, std::nullopt),
      make(S::kCompleted, R::kDach, std::nullopt, std::nullopt),
      make(S::kCompleted, R::kGermany, std::nullopt, std::nullopt),
      make(S::kStarting, R::kDach, std::nullopt, std::nullopt),
      make(S::kCurrent, R::kGermany, std::nullopt, std::nullopt),
      make(std::nullopt, R::kDach, 1995, 2009),
      make(S::kCompleted, R::kGermany, 1995, 2009),
      make(std::nullopt, R::kDach, 2000, std::nullopt),
      make(std::nullopt, R::kGermany, std::nullopt, 2000),
      make(std::nullopt, R::kGermany, 2005, 2005),
      make(S::kCurrent, R::kDach, 2010, 2012),
  };
}

ProjectRecord RandomPageRecord(Rng &rng, int index) {
  ProjectRecord r;
  r.id = Id(index);
  r.title = "Synthetic project " + std::to_string(index);
  int start = Uniform(rng, 1990, 2012);
  int end = start + Uniform(rng, 0, 4);
  r.duration_from = RandomDay(rng, start);
  r.duration_to = RandomDay(rng, end);
  if (end == start && *r.duration_to < *r.duration_from) std::swap(r.duration_from, r.duration_to);
  r.year_start = start;
  r.year_end = end;
  FillResearchTypes(rng, r);
  const auto &classes = SyntheticClassifications();
  // Blank classifications cannot be written as an annotation.
  size_t pick = static_cast<size_t>(Uniform(rng, 0, static_cast<int>(classes.size()) - 2));
  r.main_classification = classes[pick];
  if (!kExpectedArea[pick].empty()) r.disciplinary_area = ParseAreaLabel(kExpectedArea[pick]);
  FillLists(rng, r);
  r.country = RandomCountry(rng);
  return r;
}

PageSource RecordPage(const ProjectRecord &r) {
  std::string m;
  m += "'''" + r.title + "'''\n\n";
  m += "Erfassungsnr.: [[id::" + r.id + "]]\n";
  m += "Titel: [[Titel::" + r.title + "]]\n";
  if (r.duration_from && r.duration_to) {
    m += "Laufzeit: {{Laufzeit|von=" + Slash(*r.duration_from) + "|bis=" + Slash(*r.duration_to) +
         "}}\n";
  }
  m += "Art der Forschung:";
  for (ResearchTypeFlag flag : r.research_types) {
    m += " [[Forschungsart::" + kFlagSurfaces[static_cast<size_t>(flag)] + "]]";
  }
  m += "\n\n== Institutionen ==\n";
  for (const std::string &i : r.institutions) m += "* [[Forschungseinrichtung::" + i + "]]\n";
  m += "\n== Beteiligte Personen ==\n";
  for (const std::string &p : r.persons) m += "* [[Personen::" + p + "]]\n";
  m += "\nSchlagwörter:";
  for (const std::string &k : r.keywords) m += " [[Schlagwörter::" + k + "]]";
  m += "\n";
  if (!r.main_classification.empty()) {
    m += "[[Hauptklassifikationsuch::" + r.main_classification + "]]\n";
  }
  if (r.country != Country::kUnknown) m += "[[Land::" + std::string(CountryId(r.country)) + "]]\n";
  m += "[[Category: Projekte]]\n";
  return PageSource{PageName(Namespace::kMain, "Projekt " + r.id), m};
}

PageSource DurationTemplatePage() {
  return PageSource{PageName(Namespace::kTemplate, "Laufzeit"),
                    "[[Laufzeit Von::{{{von}}}|{{{von}}}]] bis [[Laufzeit Bis::{{{bis}}}|{{{bis}}}]]"};
}

std::string RandomMarkup(Rng &rng, size_t length) {
  static const std::vector<std::string> kTokens = {
      "[[", "]]", "{{", "}}", "{{{", "}}}", "[", "]", "{", "}", "|", ":", "::", "=",
      "Category:", "Template:", "x", "Jahr", " ", " ", "\n", "1", "ä", "€", "ß", "'''"};
  std::string out;
  while (out.size() < length) {
    out += kTokens[static_cast<size_t>(Uniform(rng, 0, static_cast<int>(kTokens.size()) - 1))];
  }
  return out;
}

}  // namespace fieldmon::testing
