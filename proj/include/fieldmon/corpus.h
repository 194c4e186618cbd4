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

#ifndef FIELDMON_CORPUS_H_
#define FIELDMON_CORPUS_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fieldmon/record.h"

namespace fieldmon {

struct CorpusSummary {
  size_t record_count = 0;
  // Over records that have a year_end; both empty when none does.
  std::optional<int> min_year_end;
  std::optional<int> max_year_end;

  bool operator==(const CorpusSummary &) const = default;
};

// Project records keyed (and therefore iterated) by id.
class Corpus {
 public:
  Corpus() = default;

  // Rejects records that violate their invariants (std::invalid_argument)
  // and returns false, leaving the corpus unchanged, on a duplicate id.
  bool Insert(ProjectRecord record);

  const ProjectRecord *Find(std::string_view id) const;
  const std::map<std::string, ProjectRecord, std::less<>> &records() const { return records_; }
  const CorpusSummary &summary() const { return summary_; }
  size_t size() const { return records_.size(); }

 private:
  std::map<std::string, ProjectRecord, std::less<>> records_;
  CorpusSummary summary_;
};

enum class Region { kGermany, kDach };

std::string_view RegionId(Region region);
std::optional<Region> ParseRegion(std::string_view id);

struct CorpusFilter {
  std::optional<ProjectStatus> status;
  Region region = Region::kDach;
  std::optional<int> year_from;
  std::optional<int> year_to;

  bool year_bounded() const { return year_from.has_value() || year_to.has_value(); }
  bool operator==(const CorpusFilter &) const = default;
};

// Throws std::invalid_argument when year_from > year_to.
void ValidateFilter(const CorpusFilter &filter);

bool MatchesFilter(const ProjectRecord &record, const CorpusFilter &filter);

// Matching records in ascending id order. Pointers stay valid for the
// lifetime of `corpus`.
std::vector<const ProjectRecord *> FilterRecords(const Corpus &corpus,
                                                 const CorpusFilter &filter);

// Line-oriented snapshot format: a header object followed by one JSON
// object per record in id order, each on its own line.
std::string SerializeCorpus(const Corpus &corpus);

// Throws std::runtime_error naming the offending line.
Corpus DeserializeCorpus(std::string_view text);

void SaveCorpus(const Corpus &corpus, const std::filesystem::path &path);

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view bytes);

// An immutable published corpus together with its content hash.
struct Snapshot {
  Corpus corpus;
  std::string id;
};

std::shared_ptr<const Snapshot> MakeSnapshot(Corpus corpus);
std::shared_ptr<const Snapshot> LoadSnapshot(const std::filesystem::path &path);

// Holds the current snapshot. Readers get a complete snapshot that stays
// alive for as long as they hold it; Publish swaps atomically.
class SnapshotStore {
 public:
  explicit SnapshotStore(std::shared_ptr<const Snapshot> initial)
      : current_(std::move(initial)) {}

  std::shared_ptr<const Snapshot> Get() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return current_;
  }

  void Publish(std::shared_ptr<const Snapshot> next) {
    std::lock_guard<std::mutex> lock(mutex_);
    current_ = std::move(next);
  }

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const Snapshot> current_;
};

}  // namespace fieldmon

#endif  // FIELDMON_CORPUS_H_
