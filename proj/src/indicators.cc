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

#include "fieldmon/indicators.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fieldmon {

namespace {

// Label for records whose classification is blank.
constexpr std::string_view kBlankClassification = "(none)";

MultiSeries EmptySeries(YearRange range, std::initializer_list<std::string_view> labels) {
  MultiSeries out{range, {}};
  for (std::string_view label : labels) out.series.emplace_back(std::string(label), YearSeries(range));
  return out;
}

}  // namespace

YearSeries::YearSeries(YearRange range) : range_(range) {
  if (range.from > range.to) throw std::invalid_argument("year range is reversed");
  counts_.assign(range.size(), 0);
}

int64_t YearSeries::at(int year) const {
  if (!range_.Contains(year)) throw std::out_of_range("year outside series range");
  return counts_[static_cast<size_t>(year - range_.from)];
}

void YearSeries::Increment(int year) {
  if (!range_.Contains(year)) throw std::out_of_range("year outside series range");
  ++counts_[static_cast<size_t>(year - range_.from)];
}

int64_t YearSeries::Sum() const {
  return std::accumulate(counts_.begin(), counts_.end(), int64_t{0});
}

int64_t DistributionResult::Sum() const {
  int64_t sum = 0;
  for (const auto &[label, count] : counts) sum += count;
  return sum;
}

const YearSeries *MultiSeries::Find(std::string_view label) const {
  for (const auto &[name, s] : series) {
    if (name == label) return &s;
  }
  return nullptr;
}

std::string_view IndicatorId(Indicator indicator) {
  switch (indicator) {
    case Indicator::kActivity: return "activity";
    case Indicator::kDiscipline: return "discipline";
    case Indicator::kFunding: return "funding";
    case Indicator::kQualification: return "qualification";
  }
  return "";
}

std::optional<Indicator> ParseIndicator(std::string_view id) {
  for (Indicator indicator : kAllIndicators) {
    if (IndicatorId(indicator) == id) return indicator;
  }
  return std::nullopt;
}

std::string_view GranularityId(Granularity granularity) {
  return granularity == Granularity::kTotal ? "total" : "per_year";
}

std::optional<Granularity> ParseGranularity(std::string_view id) {
  if (id == "total") return Granularity::kTotal;
  if (id == "per_year") return Granularity::kPerYear;
  return std::nullopt;
}

bool SupportsGranularity(Indicator indicator, Granularity granularity) {
  switch (indicator) {
    case Indicator::kActivity:
    case Indicator::kQualification:
      return granularity == Granularity::kPerYear;
    case Indicator::kDiscipline:
      return granularity == Granularity::kTotal;
    case Indicator::kFunding:
      return true;
  }
  return false;
}

Granularity DefaultGranularity(Indicator indicator) {
  return SupportsGranularity(indicator, Granularity::kTotal) ? Granularity::kTotal
                                                             : Granularity::kPerYear;
}

YearSeries ResearchActivity(RecordView records, YearRange range) {
  YearSeries series(range);
  for (const ProjectRecord *record : records) {
    if (record->year_end && range.Contains(*record->year_end)) series.Increment(*record->year_end);
  }
  return series;
}

DistributionResult DisciplinaryAreaDistribution(RecordView records, const DisciplineMap &mapping) {
  DistributionResult out;
  for (DisciplinaryArea area : AllDisciplinaryAreas()) out.counts[std::string(AreaLabel(area))] = 0;
  for (const ProjectRecord *record : records) {
    std::optional<DisciplinaryArea> area;
    if (!record->main_classification.empty()) {
      area = mapping.Lookup(record->main_classification);
    } else {
      area = record->disciplinary_area;
    }
    if (area.has_value()) {
      ++out.counts[std::string(AreaLabel(*area))];
      ++out.total_projects;
    } else {
      std::string key = record->main_classification.empty() ? std::string(kBlankClassification)
                                                            : record->main_classification;
      ++out.unmapped[key];
    }
  }
  return out;
}

DistributionResult FundingTypeTotals(RecordView records) {
  DistributionResult out;
  for (FundingType type : kAllFundingTypes) out.counts[std::string(FundingId(type))] = 0;
  for (const ProjectRecord *record : records) {
    for (FundingType type : record->funding_types) ++out.counts[std::string(FundingId(type))];
    if (!record->funding_types.empty()) ++out.total_projects;
  }
  return out;
}

MultiSeries FundingTypePerYear(RecordView records, YearRange range) {
  MultiSeries out = EmptySeries(range, {FundingId(FundingType::kInHouse),
                                        FundingId(FundingType::kThirdParty),
                                        FundingId(FundingType::kContract)});
  for (const ProjectRecord *record : records) {
    if (!record->year_end || !range.Contains(*record->year_end)) continue;
    for (FundingType type : record->funding_types) {
      out.series[static_cast<size_t>(type)].second.Increment(*record->year_end);
    }
  }
  return out;
}

MultiSeries Qualification(RecordView records, YearRange range) {
  MultiSeries out = EmptySeries(range, {QualificationId(QualificationType::kDoctoral),
                                        QualificationId(QualificationType::kHabilitation)});
  for (const ProjectRecord *record : records) {
    if (!record->qualification || !record->year_end || !range.Contains(*record->year_end)) {
      continue;
    }
    out.series[static_cast<size_t>(*record->qualification)].second.Increment(*record->year_end);
  }
  return out;
}

void ValidateQuery(const IndicatorQuery &query) {
  ValidateFilter(query.filter);
  if (!SupportsGranularity(query.indicator, query.granularity)) {
    throw std::invalid_argument(std::string(IndicatorId(query.indicator)) +
                                " does not support granularity " +
                                std::string(GranularityId(query.granularity)));
  }
}

QueryResult RunQuery(const Corpus &corpus, const IndicatorQuery &query,
                     const DisciplineMap &mapping) {
  ValidateQuery(query);
  std::vector<const ProjectRecord *> records = FilterRecords(corpus, query.filter);

  QueryResult result;
  result.query = query;
  result.filtered_count = records.size();

  std::optional<int> min_year;
  std::optional<int> max_year;
  for (const ProjectRecord *record : records) {
    if (!record->year_end) continue;
    min_year = std::min(min_year.value_or(*record->year_end), *record->year_end);
    max_year = std::max(max_year.value_or(*record->year_end), *record->year_end);
  }
  std::optional<int> from = query.filter.year_from ? query.filter.year_from : min_year;
  std::optional<int> to = query.filter.year_to ? query.filter.year_to : max_year;
  if (from && to && *from <= *to) result.range = YearRange{*from, *to};

  switch (query.indicator) {
    case Indicator::kDiscipline:
      result.value = DisciplinaryAreaDistribution(records, mapping);
      return result;
    case Indicator::kFunding:
      if (query.granularity == Granularity::kTotal) {
        result.value = FundingTypeTotals(records);
        return result;
      }
      if (result.range) result.value = FundingTypePerYear(records, *result.range);
      return result;
    case Indicator::kActivity:
      if (result.range) result.value = ResearchActivity(records, *result.range);
      return result;
    case Indicator::kQualification:
      if (result.range) result.value = Qualification(records, *result.range);
      return result;
  }
  return result;
}

}  // namespace fieldmon
