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

// The four field indicators: research activity, disciplinary area, type of
// funding and qualification. All counts are absolute; every per-year
// indicator attributes a project to its completion year (year_end).

#ifndef FIELDMON_INDICATORS_H_
#define FIELDMON_INDICATORS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fieldmon/corpus.h"
#include "fieldmon/record.h"

namespace fieldmon {

using RecordView = std::span<const ProjectRecord *const>;

struct YearRange {
  int from = 0;
  int to = 0;

  bool Contains(int year) const { return year >= from && year <= to; }
  size_t size() const { return static_cast<size_t>(to - from + 1); }
  bool operator==(const YearRange &) const = default;
};

// Zero-filled counts for every year of a contiguous range.
class YearSeries {
 public:
  // Throws std::invalid_argument if range.from > range.to.
  explicit YearSeries(YearRange range);

  const YearRange &range() const { return range_; }
  int64_t at(int year) const;
  void Increment(int year);
  const std::vector<int64_t> &counts() const { return counts_; }
  int64_t Sum() const;

  bool operator==(const YearSeries &) const = default;

 private:
  YearRange range_;
  std::vector<int64_t> counts_;
};

struct DistributionResult {
  std::map<std::string, int64_t> counts;
  // Distinct projects that contributed to at least one category.
  int64_t total_projects = 0;
  // Classification strings the mapping could not place (discipline only).
  std::map<std::string, int64_t> unmapped;

  int64_t Sum() const;
  bool operator==(const DistributionResult &) const = default;
};

// Labelled series sharing one year range, in a fixed label order.
struct MultiSeries {
  YearRange range;
  std::vector<std::pair<std::string, YearSeries>> series;

  const YearSeries *Find(std::string_view label) const;
  bool operator==(const MultiSeries &) const = default;
};

enum class Indicator { kActivity, kDiscipline, kFunding, kQualification };
enum class Granularity { kTotal, kPerYear };

inline constexpr Indicator kAllIndicators[] = {Indicator::kActivity, Indicator::kDiscipline,
                                               Indicator::kFunding, Indicator::kQualification};

std::string_view IndicatorId(Indicator indicator);
std::optional<Indicator> ParseIndicator(std::string_view id);
std::string_view GranularityId(Granularity granularity);
std::optional<Granularity> ParseGranularity(std::string_view id);

// activity and qualification are per-year only, discipline is total only,
// funding supports both.
bool SupportsGranularity(Indicator indicator, Granularity granularity);
Granularity DefaultGranularity(Indicator indicator);

YearSeries ResearchActivity(RecordView records, YearRange range);

// A record counts toward the area its main classification maps to. Records
// without a classification fall back to a stored disciplinary area (tabular
// imports); anything else lands in `unmapped`.
DistributionResult DisciplinaryAreaDistribution(RecordView records,
                                                const DisciplineMap &mapping);

// Multi-counting: a project adds 1 to every funding type it carries.
DistributionResult FundingTypeTotals(RecordView records);
MultiSeries FundingTypePerYear(RecordView records, YearRange range);

MultiSeries Qualification(RecordView records, YearRange range);

struct IndicatorQuery {
  Indicator indicator = Indicator::kActivity;
  CorpusFilter filter;
  Granularity granularity = Granularity::kPerYear;
};

// Throws std::invalid_argument for an invalid filter or granularity.
void ValidateQuery(const IndicatorQuery &query);

using IndicatorValue = std::variant<std::monostate, YearSeries, DistributionResult, MultiSeries>;

struct QueryResult {
  IndicatorQuery query;
  // Resolved time axis. Requested bounds win; missing ones default to the
  // filtered records' year_end extremes. Empty when nothing can be placed on
  // the axis, in which case per-year results are std::monostate.
  std::optional<YearRange> range;
  size_t filtered_count = 0;
  IndicatorValue value;
};

QueryResult RunQuery(const Corpus &corpus, const IndicatorQuery &query,
                     const DisciplineMap &mapping);

}  // namespace fieldmon

#endif  // FIELDMON_INDICATORS_H_
