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

#include "support/oracle.h"

#include <algorithm>
#include <sstream>

namespace fieldmon::testing {

namespace {

// Indexed by the enum's underlying value.
const char *const kAreaNames[] = {
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
const char *const kFundingNames[] = {"in_house", "third_party", "contract"};
const char *const kQualificationNames[] = {"doctoral", "habilitation"};
const char *const kStatusNames[] = {"completed", "starting", "current"};

std::optional<std::string> AreaFor(const std::string &classification) {
  if (classification == "Erziehungswissenschaft") return "Education";
  if (classification == "Psychologie") return "Psychology";
  for (const char *name : kAreaNames) {
    if (classification == name) return std::string(name);
  }
  return std::nullopt;
}

YearTally ZeroFilled(const std::map<int, int64_t> &raw, std::pair<int, int> range) {
  YearTally out;
  for (int y = range.first; y <= range.second; ++y) {
    auto it = raw.find(y);
    out[y] = it == raw.end() ? 0 : it->second;
  }
  return out;
}

template <typename T>
std::string Show(const std::map<T, int64_t> &m) {
  std::ostringstream os;
  os << "{";
  for (const auto &[k, v] : m) os << k << ":" << v << " ";
  os << "}";
  return os.str();
}

std::string Describe(const CorpusFilter &f) {
  std::ostringstream os;
  os << "status=" << (f.status ? kStatusNames[static_cast<int>(*f.status)] : "-")
     << " region=" << (f.region == Region::kGermany ? "germany" : "dach")
     << " from=" << (f.year_from ? std::to_string(*f.year_from) : "-")
     << " to=" << (f.year_to ? std::to_string(*f.year_to) : "-");
  return os.str();
}

}  // namespace

bool OracleMatches(const ProjectRecord &r, const CorpusFilter &f) {
  bool status_ok = !f.status.has_value() ||
                   std::string(kStatusNames[static_cast<int>(r.status)]) ==
                       kStatusNames[static_cast<int>(*f.status)];
  bool region_ok = f.region == Region::kDach || r.country == Country::kDE;
  bool lower_ok = !f.year_from.has_value() || (r.year_end.has_value() && *r.year_end >= *f.year_from);
  bool upper_ok = !f.year_to.has_value() || (r.year_end.has_value() && *r.year_end <= *f.year_to);
  return status_ok && region_ok && lower_ok && upper_ok;
}

std::set<std::string> OracleSelect(const Corpus &corpus, const CorpusFilter &f) {
  std::set<std::string> out;
  for (const auto &[id, r] : corpus.records()) {
    if (OracleMatches(r, f)) out.insert(id);
  }
  return out;
}

std::optional<std::pair<int, int>> OracleRange(const Corpus &corpus, const CorpusFilter &f) {
  return OracleTally(corpus, f).range;
}

OracleResult OracleTally(const Corpus &corpus, const CorpusFilter &f) {
  OracleResult out;
  for (const char *name : kAreaNames) out.discipline[name] = 0;
  for (const char *name : kFundingNames) out.funding[name] = 0;

  std::map<int, int64_t> by_year;
  std::map<std::string, std::map<int, int64_t>> funding_by_year;
  std::map<std::string, std::map<int, int64_t>> qualification_by_year;
  std::optional<int> lo, hi;

  for (const auto &[id, r] : corpus.records()) {
    if (!OracleMatches(r, f)) continue;

    std::optional<std::string> area;
    if (r.main_classification.empty()) {
      if (r.disciplinary_area) area = kAreaNames[static_cast<int>(*r.disciplinary_area)];
    } else {
      area = AreaFor(r.main_classification);
    }
    if (area) {
      out.discipline[*area] += 1;
      out.discipline_projects += 1;
    } else {
      out.unmapped[r.main_classification.empty() ? "(none)" : r.main_classification] += 1;
    }

    for (FundingType t : r.funding_types) out.funding[kFundingNames[static_cast<int>(t)]] += 1;
    if (!r.funding_types.empty()) out.funding_projects += 1;

    if (!r.year_end) continue;
    int y = *r.year_end;
    lo = lo ? std::min(*lo, y) : y;
    hi = hi ? std::max(*hi, y) : y;
    by_year[y] += 1;
    for (FundingType t : r.funding_types) funding_by_year[kFundingNames[static_cast<int>(t)]][y] += 1;
    if (r.qualification) {
      qualification_by_year[kQualificationNames[static_cast<int>(*r.qualification)]][y] += 1;
    }
  }

  int from = f.year_from ? *f.year_from : lo.value_or(0);
  int to = f.year_to ? *f.year_to : hi.value_or(-1);
  bool have_from = f.year_from || lo;
  bool have_to = f.year_to || hi;
  if (have_from && have_to && from <= to) out.range = std::make_pair(from, to);
  if (out.range) {
    out.activity = ZeroFilled(by_year, *out.range);
    for (const char *name : kFundingNames) {
      out.funding_per_year[name] = ZeroFilled(funding_by_year[name], *out.range);
    }
    for (const char *name : kQualificationNames) {
      out.qualification[name] = ZeroFilled(qualification_by_year[name], *out.range);
    }
  }
  return out;
}

std::set<std::string> OracleFunding(const std::set<std::string> &flag_ids) {
  static const std::map<std::string, std::string> kRule = {
      {"in_house", "in_house"},
      {"third_party_funded", "third_party"},
      {"contract_research", "contract"},
  };
  std::set<std::string> out;
  for (const std::string &flag : flag_ids) {
    auto it = kRule.find(flag);
    if (it != kRule.end()) out.insert(it->second);
  }
  return out;
}

YearTally Flatten(const YearSeries &series) {
  YearTally out;
  for (int y = series.range().from; y <= series.range().to; ++y) out[y] = series.at(y);
  return out;
}

std::map<std::string, YearTally> Flatten(const MultiSeries &series) {
  std::map<std::string, YearTally> out;
  for (const auto &[label, s] : series.series) out[label] = Flatten(s);
  return out;
}

std::string CompareWithOracle(const Corpus &corpus, const CorpusFilter &filter,
                              const DisciplineMap &mapping) {
  OracleResult want = OracleTally(corpus, filter);
  std::string where = " [" + Describe(filter) + "]";

  auto run = [&](Indicator indicator, Granularity granularity) {
    IndicatorQuery q;
    q.indicator = indicator;
    q.filter = filter;
    q.granularity = granularity;
    return RunQuery(corpus, q, mapping);
  };
  auto range_ok = [&](const QueryResult &got) {
    if (!want.range) return !got.range.has_value();
    return got.range && got.range->from == want.range->first && got.range->to == want.range->second;
  };

  {
    QueryResult got = run(Indicator::kActivity, Granularity::kPerYear);
    if (!range_ok(got)) return "activity range differs" + where;
    if (want.range) {
      const YearSeries *s = std::get_if<YearSeries>(&got.value);
      if (s == nullptr) return "activity has no series" + where;
      if (Flatten(*s) != want.activity) {
        return "activity " + Show(Flatten(*s)) + " != " + Show(want.activity) + where;
      }
    } else if (!std::holds_alternative<std::monostate>(got.value)) {
      return "activity should be empty" + where;
    }
  }
  {
    QueryResult got = run(Indicator::kDiscipline, Granularity::kTotal);
    const DistributionResult *d = std::get_if<DistributionResult>(&got.value);
    if (d == nullptr) return "discipline has no distribution" + where;
    if (d->counts != want.discipline) {
      return "discipline " + Show(d->counts) + " != " + Show(want.discipline) + where;
    }
    if (d->total_projects != want.discipline_projects) return "discipline total differs" + where;
    if (d->unmapped != want.unmapped) {
      return "unmapped " + Show(d->unmapped) + " != " + Show(want.unmapped) + where;
    }
  }
  {
    QueryResult got = run(Indicator::kFunding, Granularity::kTotal);
    const DistributionResult *d = std::get_if<DistributionResult>(&got.value);
    if (d == nullptr) return "funding has no distribution" + where;
    if (d->counts != want.funding) {
      return "funding " + Show(d->counts) + " != " + Show(want.funding) + where;
    }
    if (d->total_projects != want.funding_projects) return "funding total differs" + where;
  }
  for (Indicator indicator : {Indicator::kFunding, Indicator::kQualification}) {
    QueryResult got = run(indicator, Granularity::kPerYear);
    const auto &expected = indicator == Indicator::kFunding ? want.funding_per_year : want.qualification;
    std::string name(IndicatorId(indicator));
    if (!range_ok(got)) return name + " per-year range differs" + where;
    if (!want.range) {
      if (!std::holds_alternative<std::monostate>(got.value)) return name + " should be empty" + where;
      continue;
    }
    const MultiSeries *m = std::get_if<MultiSeries>(&got.value);
    if (m == nullptr) return name + " has no series" + where;
    if (Flatten(*m) != expected) return name + " per-year series differ" + where;
  }
  return "";
}

}  // namespace fieldmon::testing
