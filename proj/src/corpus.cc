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

#include <openssl/evp.h>

#include <algorithm>
#include <stdexcept>

#include "fieldmon/table.h"
#include "fieldmon/text.h"
#include "json.hpp"

namespace fieldmon {

using nlohmann::json;

namespace {

constexpr std::string_view kFormatName = "fieldmon-corpus";
constexpr int kFormatVersion = 1;

template <typename T>
json OptionalJson(const std::optional<T> &value) {
  return value.has_value() ? json(*value) : json(nullptr);
}

json DateJson(const std::optional<Date> &date) {
  return date.has_value() ? json(date->ToString()) : json(nullptr);
}

json RecordToJson(const ProjectRecord &r) {
  json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["duration_from"] = DateJson(r.duration_from);
  j["duration_to"] = DateJson(r.duration_to);
  j["year_start"] = OptionalJson(r.year_start);
  j["year_end"] = OptionalJson(r.year_end);
  json flags = json::array();
  for (ResearchTypeFlag flag : r.research_types) flags.push_back(FlagId(flag));
  j["research_types"] = flags;
  json funding = json::array();
  for (FundingType type : r.funding_types) funding.push_back(FundingId(type));
  j["funding_types"] = funding;
  j["qualification"] = r.qualification ? json(QualificationId(*r.qualification)) : json(nullptr);
  j["main_classification"] = r.main_classification;
  j["disciplinary_area"] =
      r.disciplinary_area ? json(AreaLabel(*r.disciplinary_area)) : json(nullptr);
  j["keywords"] = r.keywords;
  j["institutions"] = r.institutions;
  j["institution_count"] = r.institution_count;
  j["persons"] = r.persons;
  j["country"] = CountryId(r.country);
  j["status"] = StatusId(r.status);
  return j;
}

std::optional<Date> DateFromJson(const json &j) {
  if (j.is_null()) return std::nullopt;
  std::optional<Date> date = ParseDate(j.get<std::string>());
  if (!date.has_value()) throw std::runtime_error("bad date '" + j.get<std::string>() + "'");
  return date;
}

std::optional<int> IntFromJson(const json &j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

ProjectRecord RecordFromJson(const json &j) {
  ProjectRecord r;
  r.id = j.at("id").get<std::string>();
  r.title = j.at("title").get<std::string>();
  r.duration_from = DateFromJson(j.at("duration_from"));
  r.duration_to = DateFromJson(j.at("duration_to"));
  r.year_start = IntFromJson(j.at("year_start"));
  r.year_end = IntFromJson(j.at("year_end"));
  for (const json &flag : j.at("research_types")) {
    auto parsed = ParseFlagId(flag.get<std::string>());
    if (!parsed) throw std::runtime_error("bad research type " + flag.dump());
    r.research_types.insert(*parsed);
  }
  for (const json &type : j.at("funding_types")) {
    auto parsed = ParseFundingId(type.get<std::string>());
    if (!parsed) throw std::runtime_error("bad funding type " + type.dump());
    r.funding_types.insert(*parsed);
  }
  if (!j.at("qualification").is_null()) {
    auto parsed = ParseQualificationId(j.at("qualification").get<std::string>());
    if (!parsed) throw std::runtime_error("bad qualification " + j.at("qualification").dump());
    r.qualification = parsed;
  }
  r.main_classification = j.at("main_classification").get<std::string>();
  if (!j.at("disciplinary_area").is_null()) {
    auto parsed = ParseAreaLabel(j.at("disciplinary_area").get<std::string>());
    if (!parsed) throw std::runtime_error("bad area " + j.at("disciplinary_area").dump());
    r.disciplinary_area = parsed;
  }
  r.keywords = j.at("keywords").get<std::vector<std::string>>();
  r.institutions = j.at("institutions").get<std::vector<std::string>>();
  r.institution_count = j.at("institution_count").get<int>();
  r.persons = j.at("persons").get<std::vector<std::string>>();
  std::string country = j.at("country").get<std::string>();
  r.country = ParseCountry(country);
  if (r.country == Country::kUnknown && country != "unknown") {
    throw std::runtime_error("bad country '" + country + "'");
  }
  auto status = ParseStatus(j.at("status").get<std::string>());
  if (!status) throw std::runtime_error("bad status " + j.at("status").dump());
  r.status = *status;
  return r;
}

std::string DumpLine(const json &j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

}  // namespace

bool Corpus::Insert(ProjectRecord record) {
  std::string problem = CheckRecord(record);
  if (!problem.empty()) {
    throw std::invalid_argument("record '" + record.id + "': " + problem);
  }
  if (records_.count(record.id)) return false;
  std::optional<int> year_end = record.year_end;
  records_.emplace(record.id, std::move(record));
  ++summary_.record_count;
  if (year_end) {
    summary_.min_year_end = std::min(summary_.min_year_end.value_or(*year_end), *year_end);
    summary_.max_year_end = std::max(summary_.max_year_end.value_or(*year_end), *year_end);
  }
  return true;
}

const ProjectRecord *Corpus::Find(std::string_view id) const {
  auto it = records_.find(id);
  return it == records_.end() ? nullptr : &it->second;
}

std::string_view RegionId(Region region) {
  return region == Region::kGermany ? "germany" : "dach";
}

std::optional<Region> ParseRegion(std::string_view id) {
  if (id == "germany") return Region::kGermany;
  if (id == "dach") return Region::kDach;
  return std::nullopt;
}

void ValidateFilter(const CorpusFilter &filter) {
  if (filter.year_from && filter.year_to && *filter.year_from > *filter.year_to) {
    throw std::invalid_argument("year_from is after year_to");
  }
}

bool MatchesFilter(const ProjectRecord &record, const CorpusFilter &filter) {
  if (filter.status && record.status != *filter.status) return false;
  if (filter.region == Region::kGermany && record.country != Country::kDE) return false;
  if (filter.year_bounded()) {
    if (!record.year_end) return false;
    if (filter.year_from && *record.year_end < *filter.year_from) return false;
    if (filter.year_to && *record.year_end > *filter.year_to) return false;
  }
  return true;
}

std::vector<const ProjectRecord *> FilterRecords(const Corpus &corpus,
                                                 const CorpusFilter &filter) {
  ValidateFilter(filter);
  std::vector<const ProjectRecord *> out;
  for (const auto &[id, record] : corpus.records()) {
    if (MatchesFilter(record, filter)) out.push_back(&record);
  }
  return out;
}

std::string SerializeCorpus(const Corpus &corpus) {
  json header;
  header["format"] = kFormatName;
  header["version"] = kFormatVersion;
  header["record_count"] = corpus.size();
  std::string out = DumpLine(header);
  out += '\n';
  for (const auto &[id, record] : corpus.records()) {
    out += DumpLine(RecordToJson(record));
    out += '\n';
  }
  return out;
}

Corpus DeserializeCorpus(std::string_view text) {
  std::vector<std::string_view> lines = Split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw std::runtime_error("corpus file is empty");

  json header;
  try {
    header = json::parse(lines[0]);
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("corpus line 1: ") + e.what());
  }
  if (!header.is_object() || header.value("format", "") != kFormatName) {
    throw std::runtime_error("corpus line 1: not a fieldmon corpus file");
  }
  if (header.value("version", 0) != kFormatVersion) {
    throw std::runtime_error("corpus line 1: unsupported version");
  }

  Corpus corpus;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::string where = "corpus line " + std::to_string(i + 1) + ": ";
    try {
      if (!corpus.Insert(RecordFromJson(json::parse(lines[i])))) {
        throw std::runtime_error("duplicate id");
      }
    } catch (const json::exception &e) {
      throw std::runtime_error(where + e.what());
    } catch (const std::exception &e) {
      throw std::runtime_error(where + e.what());
    }
  }
  size_t expected = header.value("record_count", size_t{0});
  if (expected != corpus.size()) {
    throw std::runtime_error("corpus header announces " + std::to_string(expected) +
                             " records, found " + std::to_string(corpus.size()));
  }
  return corpus;
}

void SaveCorpus(const Corpus &corpus, const std::filesystem::path &path) {
  WriteFileAtomically(path, SerializeCorpus(corpus));
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::shared_ptr<const Snapshot> MakeSnapshot(Corpus corpus) {
  std::string id = Sha256Hex(SerializeCorpus(corpus));
  return std::make_shared<const Snapshot>(Snapshot{std::move(corpus), std::move(id)});
}

std::shared_ptr<const Snapshot> LoadSnapshot(const std::filesystem::path &path) {
  std::string bytes = ReadFile(path);
  Corpus corpus = DeserializeCorpus(bytes);
  return std::make_shared<const Snapshot>(Snapshot{std::move(corpus), Sha256Hex(bytes)});
}

}  // namespace fieldmon
