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

#include "fieldmon/api.h"

#include <exception>

#include "fieldmon/derive.h"
#include "fieldmon/text.h"

namespace fieldmon {

using nlohmann::json;

namespace {

constexpr std::string_view kPrefix = "/api/v1/";
constexpr int kMinYear = 1000;
constexpr int kMaxYear = 9999;

const std::string *Param(const ParamMap &params, std::string_view name) {
  auto it = params.find(name);
  return it == params.end() ? nullptr : &it->second;
}

std::optional<int> ParseYearParam(const ParamMap &params, std::string_view name) {
  const std::string *raw = Param(params, name);
  if (raw == nullptr || raw->empty()) return std::nullopt;
  std::optional<long long> year = ParseInteger(*raw);
  if (!year || *year < kMinYear || *year > kMaxYear) {
    throw ApiError(400, "malformed year '" + *raw + "'", std::string(name));
  }
  return static_cast<int>(*year);
}

std::string_view Title(Indicator indicator) {
  switch (indicator) {
    case Indicator::kActivity: return "Research activity";
    case Indicator::kDiscipline: return "Disciplinary area";
    case Indicator::kFunding: return "Type of funding";
    case Indicator::kQualification: return "Qualification theses";
  }
  return "";
}

json YearsJson(const YearRange &range) {
  json years = json::array();
  for (int year = range.from; year <= range.to; ++year) years.push_back(year);
  return years;
}

json ValueJson(const IndicatorValue &value) {
  json j;
  if (const YearSeries *s = std::get_if<YearSeries>(&value)) {
    j["type"] = "year_series";
    j["years"] = YearsJson(s->range());
    j["counts"] = s->counts();
    j["total"] = s->Sum();
  } else if (const DistributionResult *d = std::get_if<DistributionResult>(&value)) {
    j["type"] = "distribution";
    j["counts"] = d->counts;
    j["total_projects"] = d->total_projects;
    j["unmapped"] = d->unmapped;
  } else if (const MultiSeries *m = std::get_if<MultiSeries>(&value)) {
    j["type"] = "multi_series";
    j["years"] = YearsJson(m->range);
    json series = json::array();
    for (const auto &[label, s] : m->series) {
      series.push_back({{"label", label}, {"counts", s.counts()}, {"total", s.Sum()}});
    }
    j["series"] = series;
  } else {
    j["type"] = "empty";
  }
  return j;
}

ApiResponse JsonResponse(int status, const json &body, std::string_view snapshot_id) {
  ApiResponse r;
  r.status = status;
  r.body = CanonicalJson(body);
  if (!snapshot_id.empty()) r.headers.emplace_back("X-Fieldmon-Snapshot", snapshot_id);
  return r;
}

ApiResponse ErrorResponse(const ApiError &error, std::string_view snapshot_id) {
  return JsonResponse(error.status(), ErrorJson(error), snapshot_id);
}

}  // namespace

json ErrorJson(const ApiError &error) {
  json j;
  j["error"] = error.what();
  if (!error.parameter().empty()) j["parameter"] = error.parameter();
  return j;
}

Granularity GranularityForKind(ChartKind kind) {
  return IsTimeseriesKind(kind) ? Granularity::kPerYear : Granularity::kTotal;
}

bool KindAllowed(Indicator indicator, ChartKind kind) {
  return SupportsGranularity(indicator, GranularityForKind(kind));
}

ChartKind DefaultKind(Indicator indicator) {
  switch (indicator) {
    case Indicator::kDiscipline: return ChartKind::kTagcloud;
    case Indicator::kFunding: return ChartKind::kPie;
    default: return ChartKind::kBar;
  }
}

IndicatorQuery ResolveQuery(std::string_view indicator_id, const ParamMap &params) {
  std::optional<Indicator> indicator = ParseIndicator(indicator_id);
  if (!indicator) {
    throw ApiError(404, "unknown indicator '" + std::string(indicator_id) + "'", "indicator");
  }
  IndicatorQuery query;
  query.indicator = *indicator;

  if (const std::string *status = Param(params, "status"); status && !status->empty()) {
    std::optional<ProjectStatus> parsed = ParseStatus(*status);
    if (!parsed) throw ApiError(400, "unknown status '" + *status + "'", "status");
    query.filter.status = parsed;
  }
  if (const std::string *region = Param(params, "region"); region && !region->empty()) {
    std::optional<Region> parsed = ParseRegion(*region);
    if (!parsed) throw ApiError(400, "unknown region '" + *region + "'", "region");
    query.filter.region = *parsed;
  }
  query.filter.year_from = ParseYearParam(params, "from");
  query.filter.year_to = ParseYearParam(params, "to");
  if (query.filter.year_from && query.filter.year_to &&
      *query.filter.year_from > *query.filter.year_to) {
    throw ApiError(400, "from must not be after to", "from");
  }

  std::optional<Granularity> from_kind;
  if (const std::string *kind = Param(params, "kind"); kind && !kind->empty()) {
    std::optional<ChartKind> parsed = ParseChartKind(*kind);
    if (!parsed) throw ApiError(400, "unknown chart kind '" + *kind + "'", "kind");
    if (!KindAllowed(*indicator, *parsed)) {
      throw ApiError(400,
                     "chart kind " + *kind + " is not available for " + std::string(indicator_id),
                     "kind");
    }
    from_kind = GranularityForKind(*parsed);
  }
  query.granularity = from_kind.value_or(DefaultGranularity(*indicator));
  if (const std::string *g = Param(params, "granularity"); g && !g->empty()) {
    std::optional<Granularity> parsed = ParseGranularity(*g);
    if (!parsed) throw ApiError(400, "unknown granularity '" + *g + "'", "granularity");
    if (!SupportsGranularity(*indicator, *parsed)) {
      throw ApiError(400, std::string(indicator_id) + " has no " + *g + " granularity",
                     "granularity");
    }
    if (from_kind && *from_kind != *parsed) {
      throw ApiError(400, "granularity " + *g + " does not match the chart kind", "granularity");
    }
    query.granularity = *parsed;
  }
  return query;
}

ChartKind ResolveKind(const IndicatorQuery &query, const ParamMap &params) {
  const std::string *kind = Param(params, "kind");
  if (kind == nullptr || kind->empty()) {
    ChartKind fallback = DefaultKind(query.indicator);
    if (GranularityForKind(fallback) == query.granularity) return fallback;
    return query.granularity == Granularity::kPerYear ? ChartKind::kBar : ChartKind::kPie;
  }
  // ResolveQuery has already validated the kind against the indicator.
  return *ParseChartKind(*kind);
}

json FilterEcho(const QueryResult &result) {
  const CorpusFilter &filter = result.query.filter;
  json j;
  j["status"] = filter.status ? json(StatusId(*filter.status)) : json(nullptr);
  j["region"] = RegionId(filter.region);
  j["from"] = filter.year_from ? json(*filter.year_from) : json(nullptr);
  j["to"] = filter.year_to ? json(*filter.year_to) : json(nullptr);
  j["whole_period"] = !filter.year_bounded();
  if (result.range) {
    j["range"] = {{"from", result.range->from}, {"to", result.range->to}};
  } else {
    j["range"] = nullptr;
  }
  return j;
}

json IndicatorJson(const QueryResult &result, std::string_view snapshot_id) {
  json j;
  j["indicator"] = IndicatorId(result.query.indicator);
  j["granularity"] = GranularityId(result.query.granularity);
  j["filter"] = FilterEcho(result);
  j["snapshot"] = snapshot_id;
  j["filtered_count"] = result.filtered_count;
  j["result"] = ValueJson(result.value);
  return j;
}

ChartSpec ChartForResult(const QueryResult &result, ChartKind kind) {
  std::string title(Title(result.query.indicator));
  ChartSpec spec;
  if (const YearSeries *s = std::get_if<YearSeries>(&result.value)) {
    spec = EmitTimeseries(*s, kind, title);
  } else if (const MultiSeries *m = std::get_if<MultiSeries>(&result.value)) {
    spec = EmitTimeseries(*m, kind, title);
  } else if (const DistributionResult *d = std::get_if<DistributionResult>(&result.value)) {
    spec = kind == ChartKind::kTagcloud ? EmitTagcloud(*d, title) : EmitDistribution(*d, kind, title);
  } else {
    spec = EmitEmptyChart(kind, title);
  }
  spec.meta = {{"indicator", IndicatorId(result.query.indicator)},
               {"granularity", GranularityId(result.query.granularity)}};
  return spec;
}

json ChartJson(const QueryResult &result, const ChartSpec &spec, std::string_view snapshot_id) {
  json j;
  j["indicator"] = IndicatorId(result.query.indicator);
  j["granularity"] = GranularityId(result.query.granularity);
  j["filter"] = FilterEcho(result);
  j["snapshot"] = snapshot_id;
  j["chart"] = ChartToJson(spec);
  return j;
}

json SummaryJson(const Snapshot &snapshot) {
  const CorpusSummary &summary = snapshot.corpus.summary();
  json j;
  j["record_count"] = summary.record_count;
  if (summary.min_year_end && summary.max_year_end) {
    j["year_span"] = {*summary.min_year_end, *summary.max_year_end};
  } else {
    j["year_span"] = nullptr;
  }
  j["filter"] = nullptr;
  j["snapshot"] = snapshot.id;
  return j;
}

json SchemaJson(const FieldMap &fields, std::string_view snapshot_id) {
  json j;
  json attributes = json::array();
  for (const auto &[attribute, field] : fields.entries()) {
    attributes.push_back({{"attribute", attribute}, {"field", RecordFieldName(field)}});
  }
  j["attributes"] = attributes;
  json areas = json::array();
  for (DisciplinaryArea area : AllDisciplinaryAreas()) areas.push_back(AreaLabel(area));
  j["disciplinary_areas"] = areas;
  json funding = json::array();
  for (FundingType type : kAllFundingTypes) funding.push_back(FundingId(type));
  j["funding_types"] = funding;
  j["qualification_types"] = {QualificationId(QualificationType::kDoctoral),
                              QualificationId(QualificationType::kHabilitation)};
  j["statuses"] = {StatusId(ProjectStatus::kCompleted), StatusId(ProjectStatus::kStarting),
                   StatusId(ProjectStatus::kCurrent)};
  j["regions"] = {RegionId(Region::kGermany), RegionId(Region::kDach)};
  json indicators = json::array();
  for (Indicator indicator : kAllIndicators) {
    json entry;
    entry["id"] = IndicatorId(indicator);
    entry["title"] = Title(indicator);
    json granularities = json::array();
    for (Granularity g : {Granularity::kTotal, Granularity::kPerYear}) {
      if (SupportsGranularity(indicator, g)) granularities.push_back(GranularityId(g));
    }
    entry["granularities"] = granularities;
    entry["default_granularity"] = GranularityId(DefaultGranularity(indicator));
    json kinds = json::array();
    for (ChartKind kind : kAllChartKinds) {
      if (KindAllowed(indicator, kind)) kinds.push_back(ChartKindId(kind));
    }
    entry["kinds"] = kinds;
    entry["default_kind"] = ChartKindId(DefaultKind(indicator));
    indicators.push_back(entry);
  }
  j["indicators"] = indicators;
  j["filter"] = nullptr;
  j["snapshot"] = snapshot_id;
  return j;
}

ApiService::ApiService(std::shared_ptr<SnapshotStore> store, DisciplineMap disciplines,
                       FieldMap fields)
    : store_(std::move(store)), disciplines_(std::move(disciplines)), fields_(std::move(fields)) {
  if (!store_) throw std::invalid_argument("snapshot store is null");
}

ApiResponse ApiService::Handle(std::string_view path, const ParamMap &params) const {
  // One snapshot per request, so a concurrent reload is never half-seen.
  std::shared_ptr<const Snapshot> snapshot = store_->Get();
  try {
    if (path.substr(0, kPrefix.size()) != kPrefix) throw ApiError(404, "not found");
    std::string_view rest = path.substr(kPrefix.size());
    if (rest == "corpus/summary") return JsonResponse(200, SummaryJson(*snapshot), snapshot->id);
    if (rest == "meta/schema") {
      return JsonResponse(200, SchemaJson(fields_, snapshot->id), snapshot->id);
    }
    size_t slash = rest.find('/');
    if (slash != std::string_view::npos) {
      std::string_view collection = rest.substr(0, slash);
      std::string_view id = rest.substr(slash + 1);
      if (!id.empty() && id.find('/') == std::string_view::npos) {
        if (collection == "indicators") return Indicator(*snapshot, id, params);
        if (collection == "charts") return Chart(*snapshot, id, params);
      }
    }
    throw ApiError(404, "not found");
  } catch (const ApiError &e) {
    return ErrorResponse(e, snapshot->id);
  } catch (const std::invalid_argument &e) {
    return ErrorResponse(ApiError(400, e.what()), snapshot->id);
  } catch (const std::exception &e) {
    return ErrorResponse(ApiError(500, e.what()), snapshot->id);
  }
}

ApiResponse ApiService::Indicator(const Snapshot &snapshot, std::string_view id,
                                  const ParamMap &params) const {
  IndicatorQuery query = ResolveQuery(id, params);
  QueryResult result = RunQuery(snapshot.corpus, query, disciplines_);
  return JsonResponse(200, IndicatorJson(result, snapshot.id), snapshot.id);
}

ApiResponse ApiService::Chart(const Snapshot &snapshot, std::string_view id,
                              const ParamMap &params) const {
  IndicatorQuery query = ResolveQuery(id, params);
  ChartKind kind = ResolveKind(query, params);
  bool svg = false;
  if (const std::string *format = Param(params, "format"); format && !format->empty()) {
    if (*format == "svg") {
      svg = true;
    } else if (*format != "json") {
      throw ApiError(400, "unknown format '" + *format + "'", "format");
    }
  }
  QueryResult result = RunQuery(snapshot.corpus, query, disciplines_);
  ChartSpec spec = ChartForResult(result, kind);
  if (!svg) return JsonResponse(200, ChartJson(result, spec, snapshot.id), snapshot.id);
  ApiResponse r;
  r.content_type = "image/svg+xml";
  r.body = RenderSvg(spec);
  r.headers.emplace_back("X-Fieldmon-Snapshot", snapshot.id);
  r.headers.emplace_back("X-Fieldmon-Filter", CanonicalJson(FilterEcho(result)));
  return r;
}

}  // namespace fieldmon
