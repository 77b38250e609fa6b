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

#ifndef LEAFSHAPE_DATASET_HPP_
#define LEAFSHAPE_DATASET_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafshape/feature.hpp"
#include "leafshape/pft.hpp"

namespace leafshape {

enum class Split { kDatabase, kQuery };

std::string_view split_name(Split split);  // "db" | "query"

struct ManifestRecord {
  std::string path;  // as written; relative paths resolve against the manifest
  std::string species;
  Split split = Split::kDatabase;
};

// Comma-delimited text with the header `path,species,split`. Blank lines are
// skipped. Throws ParseError naming the line, or DuplicatePath.
std::vector<ManifestRecord> parse_manifest(std::string_view text);
std::vector<ManifestRecord> load_manifest(const std::filesystem::path& path);
std::string format_manifest(const std::vector<ManifestRecord>& records);
void save_manifest(const std::filesystem::path& path,
                   const std::vector<ManifestRecord>& records);

std::filesystem::path resolve_record_path(
    const std::filesystem::path& manifest_path, const ManifestRecord& record);

struct ExtractionParams {
  double threshold = 0.5;
  bool dark_foreground = true;
  int zernike_order = 7;
  PftParams pft;
};

// Throws InvalidArgument naming the first parameter outside its range.
void validate(const ExtractionParams& params);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

// Identifies the extraction parameters and the manifest contents a cache was
// built from. Shortest round-trip formatting keeps it exact.
std::string fingerprint(const ExtractionParams& params,
                        std::string_view manifest_text);

// Vectors of one kind indexed by manifest row.
struct CacheTable {
  DescriptorKind kind = DescriptorKind::kGeometric;
  std::string fingerprint;
  std::vector<FeatureVector> vectors;
};

std::filesystem::path cache_file(const std::filesystem::path& cache_dir,
                                 DescriptorKind kind);
std::filesystem::path fingerprint_file(const std::filesystem::path& cache_dir,
                                       DescriptorKind kind);

// <kind>.csv with header `id,f0,f1,...` and a <kind>.fingerprint sidecar.
void save_cache(const std::filesystem::path& cache_dir,
                const CacheTable& table);
// Throws MissingCache when either file is absent and ParseError when the
// table is malformed.
CacheTable load_cache(const std::filesystem::path& cache_dir,
                      DescriptorKind kind);
// Sidecar contents, or nullopt when missing.
std::optional<std::string> read_fingerprint(
    const std::filesystem::path& cache_dir, DescriptorKind kind);

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view text);

}  // namespace leafshape

#endif  // LEAFSHAPE_DATASET_HPP_
