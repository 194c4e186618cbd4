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

// Read-only JSON API over a corpus snapshot. The handler is transport-free
// so the CLI and the HTTP server produce byte-identical bodies.
//
//   GET /api/v1/corpus/summary
//   GET /api/v1/indicators/{id}?status=&region=&from=&to=&granularity=&kind=
//   GET /api/v1/charts/{id}?kind=&format=json|svg&...
//   GET /api/v1/meta/schema

#ifndef FIELDMON_API_H_
#define FIELDMON_API_H_

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fieldmon/chart.h"
#include "fieldmon/corpus.h"
#include "fieldmon/indicators.h"
#include "fieldmon/record.h"
#include "json.hpp"

namespace fieldmon {

using ParamMap = std::map<std::string, std::string, std::less<>>;

// A request problem; rendered as {"error": ..., "parameter": ...}.
class ApiError : public std::runtime_error {
 public:
  ApiError(int status, std::string message, std::string parameter = "")
      : std::runtime_error(std::move(message)), status_(status), parameter_(std::move(parameter)) {}

  int status() const { return status_; }
  const std::string &parameter() const { return parameter_; }

 private:
  int status_;
  std::string parameter_;
};

nlohmann::json ErrorJson(const ApiError &error);

// Chart kinds an indicator can be drawn with: time-series kinds need
// per_year, the rest need total.
Granularity GranularityForKind(ChartKind kind);
bool KindAllowed(Indicator indicator, ChartKind kind);
ChartKind DefaultKind(Indicator indicator);

// Unknown indicator -> 404. Malformed or inconsistent parameters -> 400
// naming the parameter. Parameters not listed above are ignored.
IndicatorQuery ResolveQuery(std::string_view indicator_id, const ParamMap &params);

// Kind from params (or the indicator default), checked against the query.
ChartKind ResolveKind(const IndicatorQuery &query, const ParamMap &params);

nlohmann::json FilterEcho(const QueryResult &result);
nlohmann::json IndicatorJson(const QueryResult &result, std::string_view snapshot_id);
ChartSpec ChartForResult(const QueryResult &result, ChartKind kind);
nlohmann::json ChartJson(const QueryResult &result, const ChartSpec &spec,
                         std::string_view snapshot_id);
nlohmann::json SummaryJson(const Snapshot &snapshot);
nlohmann::json SchemaJson(const FieldMap &fields, std::string_view snapshot_id);

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
};

class ApiService {
 public:
  ApiService(std::shared_ptr<SnapshotStore> store, DisciplineMap disciplines, FieldMap fields);

  // `path` excludes the query string. Never throws for request errors.
  ApiResponse Handle(std::string_view path, const ParamMap &params) const;

  SnapshotStore &store() const { return *store_; }
  const DisciplineMap &disciplines() const { return disciplines_; }

 private:
  ApiResponse Indicator(const Snapshot &snapshot, std::string_view id,
                        const ParamMap &params) const;
  ApiResponse Chart(const Snapshot &snapshot, std::string_view id, const ParamMap &params) const;

  std::shared_ptr<SnapshotStore> store_;
  DisciplineMap disciplines_;
  FieldMap fields_;
};

struct ServerOptions {
  std::string bind = "127.0.0.1:8080";
  std::optional<std::string> static_dir;
  // Reloaded on SIGHUP when set.
  std::optional<std::string> corpus_path;
  // Called with the bound port once the socket is listening.
  std::function<void(int)> on_listening;
  // Polled alongside the signals; setting it stops the server.
  const std::atomic<bool> *stop = nullptr;
};

// host:port, [v6]:port or a bare port. Throws std::invalid_argument.
std::pair<std::string, int> ParseBindAddress(std::string_view bind);

// Blocks until SIGINT or SIGTERM. Throws std::runtime_error naming the
// address if it cannot bind.
void Serve(ApiService &service, const ServerOptions &options);

}  // namespace fieldmon

#endif  // FIELDMON_API_H_
