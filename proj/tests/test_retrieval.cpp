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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "leafshape/error.hpp"
#include "leafshape/retrieval.hpp"

namespace leafshape {
namespace {

FeatureVector fv(std::vector<double> v, DescriptorKind k = DescriptorKind::kPft) {
  return {k, std::move(v)};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

struct RandomSet {
  std::vector<DatabaseEntry> db;
  std::vector<LabeledQuery> queries;
};

RandomSet random_set(std::mt19937_64& rng, int classes, int per_class,
                     int queries_per_class, int dim) {
  std::normal_distribution<double> noise(0.0, 1.0);
  RandomSet s;
  std::int64_t id = 0;
  for (int c = 0; c < classes; ++c) {
    std::vector<double> center(dim);
    for (double& x : center) x = 3.0 * noise(rng);
    const std::string label = "c" + std::to_string(c);
    for (int i = 0; i < per_class + queries_per_class; ++i) {
      std::vector<double> v = center;
      for (double& x : v) x += noise(rng);
      if (i < per_class) {
        s.db.push_back({fv(v), label, id++});
      } else {
        s.queries.push_back({fv(v), label});
      }
    }
  }
  return s;
}

TEST(Distance, Basics) {
  EXPECT_EQ(euclidean_distance(fv({0, 0}), fv({3, 4})), 5.0);
  EXPECT_EQ(euclidean_distance(fv({1, 2, 3}), fv({1, 2, 3})), 0.0);
  EXPECT_EQ(code_of([] { euclidean_distance(fv({1}), fv({1, 2})); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] {
              euclidean_distance(fv({1}), fv({1}, DescriptorKind::kZernike));
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(Distance, Symmetric) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0, 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> a(9), b(9);
    for (double& x : a) x = n(rng);
    for (double& x : b) x = n(rng);
    EXPECT_EQ(euclidean_distance(fv(a), fv(b)), euclidean_distance(fv(b), fv(a)));
  }
}

TEST(Rank, HandComputedOrdering) {
  const IndexedDatabase db(DescriptorKind::kPft,
                           {{fv({0, 0}), "a", 10},
                            {fv({3, 4}), "b", 11},
                            {fv({1, 1}), "c", 12}});
  const auto r = rank(fv({1, 0}), db);
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries[0].id, 10);  // distance 1
  EXPECT_EQ(r.entries[1].id, 12);  // distance 1, larger id
  EXPECT_EQ(r.entries[2].id, 11);  // sqrt(20)
  EXPECT_DOUBLE_EQ(r.entries[2].distance, std::sqrt(20.0));
}

TEST(Rank, SingletonAndSelfMatch) {
  const IndexedDatabase one(DescriptorKind::kPft, {{fv({9, 9}), "x", 3}});
  EXPECT_EQ(rank(fv({0, 0}), one).entries.front().id, 3);
  std::mt19937_64 rng(2);
  const auto s = random_set(rng, 4, 5, 0, 6);
  const IndexedDatabase db(DescriptorKind::kPft, s.db);
  const auto r = rank(s.db[7].features, db);
  EXPECT_EQ(r.entries.front().id, s.db[7].id);
  EXPECT_EQ(r.entries.front().distance, 0.0);
}

TEST(Rank, Errors) {
  const IndexedDatabase empty(DescriptorKind::kPft, {});
  EXPECT_EQ(code_of([&] { rank(fv({1}), empty); }), ErrorCode::kEmptyDatabase);
  const IndexedDatabase db(DescriptorKind::kPft, {{fv({1, 2}), "a", 0}});
  EXPECT_EQ(code_of([&] { rank(fv({1}), db); }), ErrorCode::kDimensionMismatch);
}

TEST(Rank, InvariantUnderDatabasePermutation) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto s = random_set(rng, 5, 6, 2, 4);
    // Duplicate a vector under a new id to force a distance tie.
    s.db.push_back({s.db[0].features, "dup", 999});
    const auto a = rank(s.queries[0].features, IndexedDatabase(DescriptorKind::kPft, s.db));
    std::shuffle(s.db.begin(), s.db.end(), rng);
    const auto b = rank(s.queries[0].features, IndexedDatabase(DescriptorKind::kPft, s.db));
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      EXPECT_EQ(a.entries[i].id, b.entries[i].id);
      EXPECT_EQ(a.entries[i].distance, b.entries[i].distance);
    }
  }
}

TEST(Rank, MonotoneTransformKeepsOrder) {
  std::mt19937_64 rng(4);
  const auto s = random_set(rng, 6, 5, 3, 5);
  const IndexedDatabase db(DescriptorKind::kPft, s.db);
  for (const auto& q : s.queries) {
    const auto r = rank(q.features, db);
    auto squared = r.entries;
    for (auto& e : squared) e.distance *= e.distance;
    std::stable_sort(squared.begin(), squared.end(), [](const auto& a, const auto& b) {
      return a.distance != b.distance ? a.distance < b.distance : a.id < b.id;
    });
    for (std::size_t i = 0; i < squared.size(); ++i)
      EXPECT_EQ(squared[i].id, r.entries[i].id);
  }
}

TEST(PrecisionAtK, Positions) {
  RankedResult r;
  r.entries = {{0, "x", 0.1}, {1, "y", 0.2}, {2, "a", 0.3}, {3, "z", 0.4},
               {4, "w", 0.5}};
  EXPECT_FALSE(precision_at_k(r, "a", 1));
  EXPECT_TRUE(precision_at_k(r, "a", 3));
  EXPECT_TRUE(precision_at_k(r, "a", 5));
  EXPECT_TRUE(precision_at_k(r, "x", 1));
  EXPECT_FALSE(precision_at_k(r, "q", 5));
  r.entries.resize(2);
  EXPECT_EQ(code_of([&] { precision_at_k(r, "a", 3); }),
            ErrorCode::kInsufficientResults);
}

TEST(Evaluate, PerfectSeparation) {
  std::vector<DatabaseEntry> db;
  std::vector<LabeledQuery> q;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 4; ++i)
      db.push_back({fv({100.0 * c + i}), "s" + std::to_string(c), c * 10 + i});
    q.push_back({fv({100.0 * c + 1.5}), "s" + std::to_string(c)});
  }
  const auto rep = evaluate(q, IndexedDatabase(DescriptorKind::kPft, db));
  EXPECT_EQ(rep.p1, 100.0);
  EXPECT_EQ(rep.p3, 100.0);
  EXPECT_EQ(rep.p5, 100.0);
  EXPECT_EQ(rep.query_count, 3);
}

TEST(Evaluate, CountsToPercent) {
  // 250 queries with 160 relevant at rank 1 gives 64%.
  std::vector<DatabaseEntry> db;
  for (int i = 0; i < 5; ++i) db.push_back({fv({10.0 * i}), i == 0 ? "hit" : "miss", i});
  std::vector<LabeledQuery> q;
  for (int i = 0; i < 250; ++i) q.push_back({fv({0.0}), i < 160 ? "hit" : "other"});
  const auto rep = evaluate(q, IndexedDatabase(DescriptorKind::kPft, db));
  EXPECT_EQ(rep.relevant1, 160);
  EXPECT_DOUBLE_EQ(rep.p1, 64.0);
}

TEST(Evaluate, MonotoneAndGranular) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<int> cls(2, 8), per(2, 6), qs(1, 4), dim(1, 10);
    const auto s = random_set(rng, cls(rng), std::max(5, per(rng)), qs(rng), dim(rng));
    const auto rep = evaluate(s.queries, IndexedDatabase(DescriptorKind::kPft, s.db));
    EXPECT_LE(rep.p1, rep.p3);
    EXPECT_LE(rep.p3, rep.p5);
    EXPECT_LE(rep.p5, 100.0);
    const double unit = 100.0 / static_cast<double>(rep.query_count);
    for (double p : {rep.p1, rep.p3, rep.p5}) {
      const double k = p / unit;
      EXPECT_NEAR(k, std::round(k), 1e-9);
    }
  }
}

TEST(Combine, ConcatenatesStandardizedParts) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> n(5, 3);
  std::vector<FeatureVector> a, b;
  for (int i = 0; i < 40; ++i) {
    std::vector<double> va(24), vb(7);
    for (double& x : va) x = n(rng);
    for (double& x : vb) x = 1e-3 * n(rng);
    vb[6] = 2.5;  // constant dimension
    a.push_back(fv(va, DescriptorKind::kPft));
    b.push_back(fv(vb, DescriptorKind::kHuRaw));
  }
  const std::vector<NormalizationStats> stats = {compute_stats(a), compute_stats(b)};
  std::vector<FeatureVector> combined;
  for (int i = 0; i < 40; ++i) {
    const FeatureVector parts[2] = {a[i], b[i]};
    combined.push_back(combine(parts, stats));
  }
  EXPECT_EQ(combined[0].size(), 31u);
  EXPECT_EQ(combined[0].kind, DescriptorKind::kCombined);
  const auto after = compute_stats(combined);
  for (std::size_t d = 0; d < 31; ++d) {
    EXPECT_NEAR(after.mean[d], 0.0, 1e-12);
    if (d == 30) {
      EXPECT_EQ(after.stddev[d], 0.0);
      for (const auto& v : combined) EXPECT_EQ(v.values[d], 0.0);
    } else {
      EXPECT_NEAR(after.stddev[d], 1.0, 1e-12);
    }
  }
}

TEST(Combine, IdentityStats) {
  const FeatureVector v = fv({1.5, -2.0, 7.0}, DescriptorKind::kZernike);
  const NormalizationStats id{{0, 0, 0}, {1, 1, 1}};
  const auto out = combine(std::span(&v, 1), std::span(&id, 1));
  EXPECT_EQ(out.values, v.values);
  EXPECT_EQ(out.kind, DescriptorKind::kCombined);
  const NormalizationStats wrong{{0}, {1}};
  EXPECT_EQ(code_of([&] { combine(std::span(&v, 1), std::span(&wrong, 1)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(IndexedDatabase, StatsApplyToBothSides) {
  std::vector<DatabaseEntry> entries = {{fv({0, 100}), "a", 0},
                                        {fv({1, 300}), "b", 1},
                                        {fv({2, 200}), "c", 2}};
  std::vector<FeatureVector> vs;
  for (const auto& e : entries) vs.push_back(e.features);
  const IndexedDatabase raw(DescriptorKind::kPft, entries);
  const IndexedDatabase z(DescriptorKind::kPft, entries, compute_stats(vs));
  // Raw distance is dominated by the second dimension; standardized is not.
  EXPECT_EQ(rank(fv({2, 110}), raw).entries.front().id, 0);
  EXPECT_EQ(rank(fv({2, 110}), z).entries.front().id, 2);
}

}  // namespace
}  // namespace leafshape
