// Copyright 2026 The leafshape Authors
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

#ifndef LEAFSHAPE_RETRIEVAL_HPP_
#define LEAFSHAPE_RETRIEVAL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leafshape/feature.hpp"

namespace leafshape {

// Per-dimension mean and population standard deviation.
struct NormalizationStats {
  std::vector<double> mean;
  std::vector<double> stddev;

  std::size_t size() const { return mean.size(); }
};

// Throws EmptyDatabase for an empty list and DimensionMismatch when lengths
// differ.
NormalizationStats compute_stats(std::span<const FeatureVector> vectors);

// (x - mean) / stddev per dimension; a zero stddev maps the component to 0.
// The kind is preserved.
FeatureVector standardize(const FeatureVector& v,
                          const NormalizationStats& stats);

struct DatabaseEntry {
  FeatureVector features;
  std::string species;
  std::int64_t id = 0;
};

// Immutable after construction, so concurrent queries are safe.
class IndexedDatabase {
 public:
  IndexedDatabase(DescriptorKind kind, std::vector<DatabaseEntry> entries,
                  std::optional<NormalizationStats> stats = std::nullopt);

  DescriptorKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<DatabaseEntry>& entries() const { return entries_; }
  const std::optional<NormalizationStats>& stats() const { return stats_; }

  // Entry features as used for distances (standardized when stats exist).
  const FeatureVector& search_vector(std::size_t i) const {
    return search_[i];
  }

 private:
  DescriptorKind kind_;
  std::size_t dimension_ = 0;
  std::vector<DatabaseEntry> entries_;
  std::optional<NormalizationStats> stats_;
  std::vector<FeatureVector> search_;
};

struct RankedEntry {
  std::int64_t id = 0;
  std::string species;
  double distance = 0.0;
};

// Sorted by (distance, id).
struct RankedResult {
  std::vector<RankedEntry> entries;
};

// Throws DimensionMismatch for different kinds or lengths.
double euclidean_distance(const FeatureVector& q, const FeatureVector& t);

RankedResult rank(const FeatureVector& query, const IndexedDatabase& db);

// True iff one of the first k entries has the given species. Throws
// InsufficientResults when fewer than k entries exist.
bool precision_at_k(const RankedResult& results, std::string_view species,
                    int k);

struct LabeledQuery {
  FeatureVector features;
  std::string species;
};

struct PerformanceReport {
  double p1 = 0.0;
  double p3 = 0.0;
  double p5 = 0.0;
  std::int64_t query_count = 0;
  std::int64_t relevant1 = 0;
  std::int64_t relevant3 = 0;
  std::int64_t relevant5 = 0;
};

PerformanceReport evaluate(std::span<const LabeledQuery> queries,
                           const IndexedDatabase& db);

// Concatenates standardize(vectors[i], stats[i]) into a Combined vector.
FeatureVector combine(std::span<const FeatureVector> vectors,
                      std::span<const NormalizationStats> stats);

}  // namespace leafshape

#endif  // LEAFSHAPE_RETRIEVAL_HPP_
