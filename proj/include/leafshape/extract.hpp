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

#ifndef LEAFSHAPE_EXTRACT_HPP_
#define LEAFSHAPE_EXTRACT_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "leafshape/dataset.hpp"
#include "leafshape/feature.hpp"
#include "leafshape/image.hpp"
#include "leafshape/silhouette.hpp"

namespace leafshape {

using FeatureSet = std::map<DescriptorKind, FeatureVector>;

// Descriptors of one silhouette for each requested single kind.
FeatureSet describe(const Silhouette& s, std::span<const DescriptorKind> kinds,
                    const ExtractionParams& params);
FeatureSet describe_image(const RasterImage& image,
                          std::span<const DescriptorKind> kinds,
                          const ExtractionParams& params);
FeatureSet describe_file(const std::filesystem::path& path,
                         std::span<const DescriptorKind> kinds,
                         const ExtractionParams& params);

struct ExtractionFailure {
  std::int64_t id = 0;
  std::string path;
  std::string message;
};

struct ExtractionResult {
  // Per kind, one vector per record in manifest order. Failed records hold
  // empty vectors.
  std::map<DescriptorKind, std::vector<FeatureVector>> vectors;
  std::vector<ExtractionFailure> failures;  // sorted by id
  // Descriptor compute time per kind, summed over records.
  std::map<DescriptorKind, double> seconds;

  bool ok() const { return failures.empty(); }
};

// Parallel over records; the result does not depend on thread count.
ExtractionResult extract_all(const std::vector<ManifestRecord>& records,
                             const std::filesystem::path& manifest_path,
                             std::span<const DescriptorKind> kinds,
                             const ExtractionParams& params);

}  // namespace leafshape

#endif  // LEAFSHAPE_EXTRACT_HPP_
