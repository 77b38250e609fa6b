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

#ifndef LEAFSHAPE_COMMANDS_HPP_
#define LEAFSHAPE_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "leafshape/dataset.hpp"
#include "leafshape/error.hpp"
#include "leafshape/feature.hpp"
#include "leafshape/retrieval.hpp"

namespace leafshape {

enum ExitStatus : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitConfig = 2,
  kExitData = 3,
};

// Config errors are bad arguments; everything else is about the data.
int exit_status_for(ErrorCode code);

struct RunConfig {
  std::filesystem::path manifest;
  std::vector<DescriptorKind> kinds{kSingleKinds.begin(), kSingleKinds.end()};
  ExtractionParams params;
  std::filesystem::path out = "leafshape-out";
  std::uint64_t seed = 1;
  int top_k = 5;

  int classes = 50;
  int db_per_class = 20;
  int query_per_class = 5;

  std::filesystem::path image;
  DescriptorKind query_kind = DescriptorKind::kPft;

  std::filesystem::path cache_dir() const { return out / "cache"; }
  std::filesystem::path report_path() const { return out / "report.csv"; }
};

struct MethodScore {
  std::string method;
  PerformanceReport report;
};

inline constexpr std::string_view kCombinedMethod = "pft+hu";

// Evaluates every selected kind from the cache, plus the Pft + HuRaw
// combination when both are selected. Throws MissingCache for absent or
// stale caches.
std::vector<MethodScore> run_benchmark(const RunConfig& config);

// `method,p1,p3,p5` with two decimals.
std::string format_report_csv(const std::vector<MethodScore>& rows);
std::string format_report_table(const std::vector<MethodScore>& rows);

// Each returns a process exit status and reports errors on `err`.
int cmd_synth(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_extract(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_query(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_benchmark(const RunConfig& config, std::ostream& out,
                  std::ostream& err);

}  // namespace leafshape

#endif  // LEAFSHAPE_COMMANDS_HPP_
