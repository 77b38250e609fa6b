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

#include "leafshape/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

#include "leafshape/error.hpp"
#include "leafshape/extract.hpp"
#include "leafshape/synth.hpp"

namespace leafshape {

namespace {

std::string read_manifest_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct LoadedRun {
  std::vector<ManifestRecord> records;
  std::string fingerprint;
};

LoadedRun load_run(const RunConfig& config) {
  if (config.manifest.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--manifest is required");
  }
  validate(config.params);
  const std::string text = read_manifest_text(config.manifest);
  return {parse_manifest(text), fingerprint(config.params, text)};
}

CacheTable load_current(const RunConfig& config, const LoadedRun& run,
                        DescriptorKind kind) {
  auto table = load_cache(config.cache_dir(), kind);
  if (table.fingerprint != run.fingerprint) {
    throw Error(ErrorCode::kMissingCache,
                std::string(kind_name(kind)) +
                    " cache was built with different parameters or manifest; "
                    "run extract again");
  }
  if (table.vectors.size() != run.records.size()) {
    throw Error(ErrorCode::kMissingCache,
                std::string(kind_name(kind)) + " cache has " +
                    std::to_string(table.vectors.size()) + " rows, manifest " +
                    std::to_string(run.records.size()));
  }
  return table;
}

struct SplitData {
  std::vector<DatabaseEntry> db;
  std::vector<LabeledQuery> queries;
};

SplitData split_vectors(const std::vector<ManifestRecord>& records,
                        const std::vector<FeatureVector>& vectors) {
  SplitData out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (vectors[i].values.empty()) {
      throw Error(ErrorCode::kMissingCache,
                  "no features for record " + std::to_string(i));
    }
    if (records[i].split == Split::kDatabase) {
      out.db.push_back(
          {vectors[i], records[i].species, static_cast<std::int64_t>(i)});
    } else {
      out.queries.push_back({vectors[i], records[i].species});
    }
  }
  return out;
}

std::vector<FeatureVector> db_vectors(const std::vector<ManifestRecord>& records,
                                      const std::vector<FeatureVector>& v) {
  std::vector<FeatureVector> out;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (records[i].split == Split::kDatabase) out.push_back(v[i]);
  return out;
}

// Pft + HuRaw, each part z-scored with database statistics.
std::vector<FeatureVector> combined_vectors(
    const std::vector<ManifestRecord>& records,
    const std::vector<FeatureVector>& pft,
    const std::vector<FeatureVector>& hu,
    std::vector<NormalizationStats>& stats) {
  stats = {compute_stats(db_vectors(records, pft)),
           compute_stats(db_vectors(records, hu))};
  std::vector<FeatureVector> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const FeatureVector parts[2] = {pft[i], hu[i]};
    out.push_back(combine(parts, stats));
  }
  return out;
}

bool selected(const RunConfig& config, DescriptorKind kind) {
  return std::find(config.kinds.begin(), config.kinds.end(), kind) !=
         config.kinds.end();
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_status_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace

int exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidIndex:
    case ErrorCode::kFrequencyOutOfRange:
      return kExitConfig;
    default:
      return kExitData;
  }
}

std::vector<MethodScore> run_benchmark(const RunConfig& config) {
  const LoadedRun run = load_run(config);
  std::map<DescriptorKind, std::vector<FeatureVector>> cached;
  for (DescriptorKind kind : kSingleKinds) {
    if (selected(config, kind))
      cached[kind] = load_current(config, run, kind).vectors;
  }
  std::vector<MethodScore> rows;
  for (const auto& [kind, vectors] : cached) {
    const auto data = split_vectors(run.records, vectors);
    const IndexedDatabase db(kind, data.db);
    rows.push_back({std::string(kind_name(kind)), evaluate(data.queries, db)});
  }
  if (cached.count(DescriptorKind::kPft) &&
      cached.count(DescriptorKind::kHuRaw)) {
    std::vector<NormalizationStats> stats;
    const auto combined =
        combined_vectors(run.records, cached[DescriptorKind::kPft],
                         cached[DescriptorKind::kHuRaw], stats);
    const auto data = split_vectors(run.records, combined);
    const IndexedDatabase db(DescriptorKind::kCombined, data.db);
    rows.push_back({std::string(kCombinedMethod), evaluate(data.queries, db)});
  }
  return rows;
}

std::string format_report_csv(const std::vector<MethodScore>& rows) {
  std::string out = "method,p1,p3,p5\n";
  for (const auto& r : rows) {
    out += r.method + ',' + fixed2(r.report.p1) + ',' + fixed2(r.report.p3) +
           ',' + fixed2(r.report.p5) + '\n';
  }
  return out;
}

std::string format_report_table(const std::vector<MethodScore>& rows) {
  std::size_t width = std::string_view("method").size();
  for (const auto& r : rows) width = std::max(width, r.method.size());
  std::ostringstream os;
  auto line = [&](const std::string& m, const std::string& a,
                  const std::string& b, const std::string& c) {
    os << m << std::string(width - m.size() + 2, ' ');
    for (const std::string* s : {&a, &b, &c})
      os << std::string(8 - std::min<std::size_t>(8, s->size()), ' ') << *s;
    os << '\n';
  };
  line("method", "P1", "P3", "P5");
  for (const auto& r : rows) {
    line(r.method, fixed2(r.report.p1), fixed2(r.report.p3),
         fixed2(r.report.p5));
  }
  if (!rows.empty()) {
    os << "(" << rows.front().report.query_count << " queries)\n";
  }
  return os.str();
}

int cmd_synth(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SynthConfig sc;
    sc.classes = config.classes;
    sc.db_per_class = config.db_per_class;
    sc.query_per_class = config.query_per_class;
    sc.seed = config.seed;
    const auto records = synthesize_benchmark(sc, config.out);
    out << "wrote " << records.size() << " images and "
        << (config.out / "manifest.csv").string() << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_extract(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    if (config.kinds.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "no descriptor kinds selected");
    }
    const LoadedRun run = load_run(config);
    std::vector<DescriptorKind> todo;
    for (DescriptorKind kind : config.kinds) {
      if (kind == DescriptorKind::kCombined) continue;
      if (read_fingerprint(config.cache_dir(), kind) != run.fingerprint)
        todo.push_back(kind);
    }
    if (todo.empty()) {
      out << "cache up to date\n";
      return static_cast<int>(kExitOk);
    }
    const auto result =
        extract_all(run.records, config.manifest, todo, config.params);
    if (!result.ok()) {
      for (const auto& f : result.failures)
        err << "record " << f.id << " (" << f.path << "): " << f.message
            << '\n';
      err << result.failures.size() << " of " << run.records.size()
          << " records failed; cache not written\n";
      return static_cast<int>(kExitData);
    }
    for (DescriptorKind kind : todo) {
      save_cache(config.cache_dir(),
                 {kind, run.fingerprint, result.vectors.at(kind)});
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.3f", result.seconds.at(kind));
      out << kind_name(kind) << ": " << run.records.size() << " vectors, "
          << secs << " s\n";
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_query(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.image.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "--image is required");
    }
    if (config.top_k < 1) {
      throw Error(ErrorCode::kInvalidArgument, "--top-k must be >= 1");
    }
    const LoadedRun run = load_run(config);
    const DescriptorKind kind = config.query_kind;

    FeatureVector query;
    std::vector<FeatureVector> vectors;
    if (kind == DescriptorKind::kCombined) {
      const auto pft = load_current(config, run, DescriptorKind::kPft).vectors;
      const auto hu = load_current(config, run, DescriptorKind::kHuRaw).vectors;
      std::vector<NormalizationStats> stats;
      vectors = combined_vectors(run.records, pft, hu, stats);
      const DescriptorKind parts_kinds[2] = {DescriptorKind::kPft,
                                             DescriptorKind::kHuRaw};
      auto parts = describe_file(config.image, parts_kinds, config.params);
      const FeatureVector parts_v[2] = {parts.at(DescriptorKind::kPft),
                                        parts.at(DescriptorKind::kHuRaw)};
      query = combine(parts_v, stats);
    } else {
      vectors = load_current(config, run, kind).vectors;
      const DescriptorKind one[1] = {kind};
      query = describe_file(config.image, one, config.params).at(kind);
    }
    const auto data = split_vectors(run.records, vectors);
    const IndexedDatabase db(kind, data.db);
    const auto ranked = rank(query, db);
    std::size_t k = static_cast<std::size_t>(config.top_k);
    if (k > ranked.entries.size()) {
      out << "note: top-k " << k << " exceeds database size "
          << ranked.entries.size() << "; showing the full ranking\n";
      k = ranked.entries.size();
    }
    out << "rank,id,species,distance,path\n";
    for (std::size_t i = 0; i < k; ++i) {
      const auto& e = ranked.entries[i];
      out << i + 1 << ',' << e.id << ',' << e.species << ','
          << format_double(e.distance) << ','
          << run.records[static_cast<std::size_t>(e.id)].path << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_benchmark(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = run_benchmark(config);
    const std::string csv = format_report_csv(rows);
    std::filesystem::create_directories(config.out);
    std::ofstream f(config.report_path(), std::ios::binary | std::ios::trunc);
    if (!f) {
      throw Error(ErrorCode::kIo, "cannot write " + config.report_path().string());
    }
    f << csv;
    if (!f) throw Error(ErrorCode::kIo, "write failed");
    out << format_report_table(rows);
    out << "report: " << config.report_path().string() << '\n';
    return static_cast<int>(kExitOk);
  });
}

}  // namespace leafshape
