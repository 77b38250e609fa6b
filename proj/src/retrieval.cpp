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

#include "leafshape/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "leafshape/error.hpp"

namespace leafshape {

namespace {

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

NormalizationStats compute_stats(std::span<const FeatureVector> vectors) {
  if (vectors.empty()) {
    throw Error(ErrorCode::kEmptyDatabase, "no vectors to summarize");
  }
  const std::size_t d = vectors.front().size();
  NormalizationStats s;
  s.mean.assign(d, 0.0);
  s.stddev.assign(d, 0.0);
  for (const auto& v : vectors) {
    if (v.size() != d) {
      throw Error(ErrorCode::kDimensionMismatch, dims(v.size(), d));
    }
    for (std::size_t i = 0; i < d; ++i) s.mean[i] += v.values[i];
  }
  const double n = static_cast<double>(vectors.size());
  for (double& m : s.mean) m /= n;
  for (const auto& v : vectors) {
    for (std::size_t i = 0; i < d; ++i) {
      const double e = v.values[i] - s.mean[i];
      s.stddev[i] += e * e;
    }
  }
  for (double& sd : s.stddev) sd = std::sqrt(sd / n);
  return s;
}

FeatureVector standardize(const FeatureVector& v,
                          const NormalizationStats& stats) {
  if (v.size() != stats.size() || stats.stddev.size() != stats.mean.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "stats " + dims(stats.size(), v.size()));
  }
  FeatureVector out{v.kind, std::vector<double>(v.size())};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double sd = stats.stddev[i];
    out.values[i] = sd > 0.0 ? (v.values[i] - stats.mean[i]) / sd : 0.0;
  }
  return out;
}

IndexedDatabase::IndexedDatabase(DescriptorKind kind,
                                 std::vector<DatabaseEntry> entries,
                                 std::optional<NormalizationStats> stats)
    : kind_(kind), entries_(std::move(entries)), stats_(std::move(stats)) {
  if (!entries_.empty()) dimension_ = entries_.front().features.size();
  for (const auto& e : entries_) {
    if (e.features.kind != kind_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "entry kind " + std::string(kind_name(e.features.kind)) +
                      " in " + std::string(kind_name(kind_)) + " database");
    }
    if (e.features.size() != dimension_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  dims(e.features.size(), dimension_));
    }
    if (e.species.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty species label");
    }
  }
  if (stats_ && !entries_.empty() && stats_->size() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "stats " + dims(stats_->size(), dimension_));
  }
  search_.reserve(entries_.size());
  for (const auto& e : entries_)
    search_.push_back(stats_ ? standardize(e.features, *stats_) : e.features);
}

double euclidean_distance(const FeatureVector& q, const FeatureVector& t) {
  if (q.kind != t.kind) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(kind_name(q.kind)) + " vs " +
                    std::string(kind_name(t.kind)));
  }
  if (q.size() != t.size()) {
    throw Error(ErrorCode::kDimensionMismatch, dims(q.size(), t.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double d = q.values[i] - t.values[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

RankedResult rank(const FeatureVector& query, const IndexedDatabase& db) {
  if (db.empty()) {
    throw Error(ErrorCode::kEmptyDatabase, "cannot rank against nothing");
  }
  const FeatureVector q =
      db.stats() ? standardize(query, *db.stats()) : query;
  RankedResult r;
  r.entries.reserve(db.size());
  for (std::size_t i = 0; i < db.size(); ++i) {
    const auto& e = db.entries()[i];
    r.entries.push_back(
        {e.id, e.species, euclidean_distance(q, db.search_vector(i))});
  }
  std::sort(r.entries.begin(), r.entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.id < b.id;
            });
  return r;
}

bool precision_at_k(const RankedResult& results, std::string_view species,
                    int k) {
  if (k < 1 || results.entries.size() < static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kInsufficientResults,
                "need " + std::to_string(k) + " results, have " +
                    std::to_string(results.entries.size()));
  }
  for (int i = 0; i < k; ++i)
    if (results.entries[i].species == species) return true;
  return false;
}

PerformanceReport evaluate(std::span<const LabeledQuery> queries,
                           const IndexedDatabase& db) {
  if (queries.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no queries");
  }
  if (db.empty()) {
    throw Error(ErrorCode::kEmptyDatabase, "empty database");
  }
  if (db.size() < 5) {
    throw Error(ErrorCode::kInsufficientResults,
                "P5 needs at least 5 database entries, have " +
                    std::to_string(db.size()));
  }
  const int n = static_cast<int>(queries.size());
  std::vector<std::array<bool, 3>> hits(queries.size());
  std::vector<std::string> errors(queries.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (int q = 0; q < n; ++q) {
    try {
      const auto r = rank(queries[q].features, db);
      hits[q] = {precision_at_k(r, queries[q].species, 1),
                 precision_at_k(r, queries[q].species, 3),
                 precision_at_k(r, queries[q].species, 5)};
    } catch (const Error& e) {
      errors[q] = e.what();
    }
  }
  for (int q = 0; q < n; ++q) {
    if (!errors[q].empty()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "query " + std::to_string(q) + ": " + errors[q]);
    }
  }
  PerformanceReport rep;
  rep.query_count = n;
  for (const auto& h : hits) {
    rep.relevant1 += h[0];
    rep.relevant3 += h[1];
    rep.relevant5 += h[2];
  }
  const double scale = 100.0 / static_cast<double>(n);
  rep.p1 = static_cast<double>(rep.relevant1) * scale;
  rep.p3 = static_cast<double>(rep.relevant3) * scale;
  rep.p5 = static_cast<double>(rep.relevant5) * scale;
  return rep;
}

FeatureVector combine(std::span<const FeatureVector> vectors,
                      std::span<const NormalizationStats> stats) {
  if (vectors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "nothing to combine");
  }
  if (vectors.size() != stats.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "stats for " + dims(stats.size(), vectors.size()) + " parts");
  }
  FeatureVector out{DescriptorKind::kCombined, {}};
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto z = standardize(vectors[i], stats[i]);
    out.values.insert(out.values.end(), z.values.begin(), z.values.end());
  }
  return out;
}

}  // namespace leafshape
