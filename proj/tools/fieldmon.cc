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

// Command-line front end: ingest pages into a corpus file, compute
// indicators and charts, and serve the JSON API.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fieldmon/api.h"
#include "fieldmon/chart.h"
#include "fieldmon/corpus.h"
#include "fieldmon/ingest.h"
#include "fieldmon/table.h"

namespace fs = std::filesystem;

namespace fieldmon {
namespace {

struct TableOptions {
  std::string schema, rules, synonyms, fields, disciplines;
};

std::string TableText(const std::string &path, std::string_view fallback) {
  return path.empty() ? std::string(fallback) : ReadFile(path);
}

DisciplineMap LoadDisciplines(const std::string &path) {
  return DisciplineMap::FromTsv(TableText(path, DefaultDisciplinesTsv()));
}

Date Today() {
  auto today = std::chrono::year_month_day(
      std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now()));
  return Date{static_cast<int>(today.year()), static_cast<int>(unsigned(today.month())),
              static_cast<int>(unsigned(today.day()))};
}

Date ReferenceDate(const std::string &text) {
  if (text.empty()) return Today();
  std::optional<Date> date = ParseDate(text);
  if (!date || !date->has_day()) {
    throw std::invalid_argument("--reference-date must be YYYY-MM-DD, got '" + text + "'");
  }
  return *date;
}

void PrintReport(const IngestReport &report, const std::string &snapshot_id) {
  std::cerr << "pages " << report.page_count << ", templates " << report.template_count
            << ", skipped " << report.skipped_count << ", records " << report.record_count
            << "\n";
  for (const auto &[kind, count] : report.diagnostics.CountsByKind()) {
    std::cerr << "  warning " << kind << ": " << count << "\n";
  }
  for (const IngestError &error : report.errors) {
    std::cerr << "  error " << error.source << ": " << error.message << "\n";
  }
  std::cerr << "snapshot " << snapshot_id << "\n";
}

struct FilterOptions {
  std::string status, region, from, to, granularity;

  void Register(CLI::App *app) {
    app->add_option("--status", status, "completed, starting or current");
    app->add_option("--region", region, "germany or dach (default)");
    app->add_option("--from", from, "first year_end to include");
    app->add_option("--to", to, "last year_end to include");
    app->add_option("--granularity", granularity, "total or per_year");
  }

  ParamMap Params() const {
    ParamMap params;
    auto put = [&](const char *name, const std::string &value) {
      if (!value.empty()) params[name] = value;
    };
    put("status", status);
    put("region", region);
    put("from", from);
    put("to", to);
    put("granularity", granularity);
    return params;
  }
};

int ReportApiError(const ApiError &e) {
  std::cerr << CanonicalJson(ErrorJson(e)) << "\n";
  return e.status() == 404 ? 3 : 2;
}

}  // namespace
}  // namespace fieldmon

int main(int argc, char **argv) {
  using namespace fieldmon;
  CLI::App app{"Research-field monitoring: ingest, indicators, charts and API."};
  app.require_subcommand(1);

  // ingest
  CLI::App *ingest = app.add_subcommand("ingest", "Build a corpus file from wiki pages or a table");
  std::string pages_dir, tabular, out, reference;
  TableOptions tables;
  int max_depth = kDefaultExpansionDepth;
  auto *pages_opt = ingest->add_option("--pages", pages_dir, "directory of *.wiki page files")
                        ->check(CLI::ExistingDirectory);
  auto *tabular_opt = ingest->add_option("--tabular", tabular, "tab-separated record table")
                          ->check(CLI::ExistingFile);
  pages_opt->excludes(tabular_opt);
  ingest->add_option("--schema", tables.schema, "attribute schema table")->check(CLI::ExistingFile);
  ingest->add_option("--rules", tables.rules, "derivation rules table")->check(CLI::ExistingFile);
  ingest->add_option("--synonyms", tables.synonyms, "research-type synonyms")
      ->check(CLI::ExistingFile);
  ingest->add_option("--fields", tables.fields, "attribute to record field map")
      ->check(CLI::ExistingFile);
  ingest->add_option("--disciplines", tables.disciplines, "classification to area map")
      ->check(CLI::ExistingFile);
  ingest->add_option("--reference-date", reference, "status reference date (default today)");
  ingest->add_option("--max-depth", max_depth, "template expansion depth")
      ->check(CLI::PositiveNumber);
  ingest->add_option("--out", out, "corpus file to write")->required();

  // indicator
  CLI::App *indicator = app.add_subcommand("indicator", "Print an indicator as canonical JSON");
  std::string indicator_id, corpus_path, disciplines_path;
  FilterOptions filters;
  indicator->add_option("id", indicator_id, "activity, discipline, funding or qualification")
      ->required();
  indicator->add_option("--corpus", corpus_path, "corpus file")->required()->check(CLI::ExistingFile);
  indicator->add_option("--disciplines", disciplines_path, "classification to area map")
      ->check(CLI::ExistingFile);
  filters.Register(indicator);

  // chart
  CLI::App *chart = app.add_subcommand("chart", "Write a chart as SVG or JSON");
  std::string kind, chart_out;
  chart->add_option("id", indicator_id, "indicator id")->required();
  chart->add_option("--corpus", corpus_path, "corpus file")->required()->check(CLI::ExistingFile);
  chart->add_option("--disciplines", disciplines_path, "classification to area map")
      ->check(CLI::ExistingFile);
  chart->add_option("--kind", kind, "bar, line_series, pie, donut, treemap, bubble or tagcloud")
      ->required();
  chart->add_option("--out", chart_out, "output file, .svg or .json")->required();
  filters.Register(chart);

  // serve
  CLI::App *serve = app.add_subcommand("serve", "Serve the JSON API over a corpus file");
  std::string bind = "127.0.0.1:8080", static_dir, fields_path;
  serve->add_option("--corpus", corpus_path, "corpus file")->required()->check(CLI::ExistingFile);
  serve->add_option("--bind", bind, "address:port")->capture_default_str();
  serve->add_option("--static", static_dir, "directory served at /")->check(CLI::ExistingDirectory);
  serve->add_option("--disciplines", disciplines_path, "classification to area map")
      ->check(CLI::ExistingFile);
  serve->add_option("--fields", fields_path, "attribute to record field map")
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      Date ref = ReferenceDate(reference);
      IngestResult result;
      if (!tabular.empty()) {
        result = ImportTabular(ReadFile(tabular), LoadDisciplines(tables.disciplines), ref);
      } else if (!pages_dir.empty()) {
        IngestConfig config;
        config.schema = Schema::FromTsv(TableText(tables.schema, DefaultSchemaTsv()));
        config.rules = RulesFromTsv(TableText(tables.rules, DefaultRulesTsv()));
        config.synonyms = FlagSynonyms::FromTsv(TableText(tables.synonyms, DefaultSynonymsTsv()));
        config.fields = FieldMap::FromTsv(TableText(tables.fields, DefaultFieldsTsv()));
        config.disciplines = LoadDisciplines(tables.disciplines);
        config.reference_date = ref;
        config.max_depth = max_depth;
        result = IngestDirectory(pages_dir, config);
      } else {
        std::cerr << "ingest needs --pages or --tabular\n";
        return 2;
      }
      SaveCorpus(result.corpus, out);
      PrintReport(result.report, LoadSnapshot(out)->id);
      return result.report.errors.empty() ? 0 : 1;
    }

    if (*indicator || *chart) {
      ParamMap params = filters.Params();
      if (*chart) params["kind"] = kind;
      std::shared_ptr<const Snapshot> snapshot = LoadSnapshot(corpus_path);
      DisciplineMap disciplines = LoadDisciplines(disciplines_path);
      try {
        IndicatorQuery query = ResolveQuery(indicator_id, params);
        QueryResult result = RunQuery(snapshot->corpus, query, disciplines);
        if (*indicator) {
          std::cout << CanonicalJson(IndicatorJson(result, snapshot->id));
          return 0;
        }
        ChartSpec spec = ChartForResult(result, ResolveKind(query, params));
        std::string ext = fs::path(chart_out).extension().string();
        if (ext == ".svg") {
          WriteFileAtomically(chart_out, RenderSvg(spec));
        } else if (ext == ".json") {
          WriteFileAtomically(chart_out, CanonicalJson(ChartJson(result, spec, snapshot->id)));
        } else {
          std::cerr << "--out must end in .svg or .json\n";
          return 2;
        }
        return 0;
      } catch (const ApiError &e) {
        return ReportApiError(e);
      }
    }

    if (*serve) {
      auto store = std::make_shared<SnapshotStore>(LoadSnapshot(corpus_path));
      ApiService service(store, LoadDisciplines(disciplines_path),
                         FieldMap::FromTsv(TableText(fields_path, DefaultFieldsTsv())));
      ServerOptions options;
      options.bind = bind;
      options.corpus_path = corpus_path;
      if (!static_dir.empty()) options.static_dir = static_dir;
      Serve(service, options);
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
