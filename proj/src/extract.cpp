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

#include "leafshape/extract.hpp"

#include <chrono>
#include <optional>

#include "leafshape/error.hpp"
#include "leafshape/geometric.hpp"
#include "leafshape/moments.hpp"
#include "leafshape/pft.hpp"
#include "leafshape/raster_io.hpp"
#include "leafshape/zernike.hpp"

namespace leafshape {

FeatureSet describe(const Silhouette& s, std::span<const DescriptorKind> kinds,
                    const ExtractionParams& params) {
  FeatureSet out;
  std::optional<HuInvariants> hu;
  auto hu_once = [&]() -> const HuInvariants& {
    if (!hu) hu = hu_invariants(s.mask);
    return *hu;
  };
  for (DescriptorKind kind : kinds) {
    FeatureVector v;
    switch (kind) {
      case DescriptorKind::kGeometric:
        v = geometric_vector(s.geometry);
        break;
      case DescriptorKind::kHuRaw:
        v = hu_vector(hu_once(), false);
        break;
      case DescriptorKind::kHuNormalized:
        v = hu_vector(hu_once(), true);
        break;
      case DescriptorKind::kZernike:
        v = zernike_descriptor(s.mask, s.geometry, params.zernike_order);
        break;
      case DescriptorKind::kPft:
        v = pft_descriptor(s.mask, s.geometry, params.pft);
        break;
      case DescriptorKind::kCombined:
        throw Error(ErrorCode::kInvalidArgument,
                    "combined vectors are built from database statistics");
    }
    require_finite(v);
    out.emplace(kind, std::move(v));
  }
  return out;
}

FeatureSet describe_image(const RasterImage& image,
                          std::span<const DescriptorKind> kinds,
                          const ExtractionParams& params) {
  return describe(
      extract_silhouette(image, params.threshold, params.dark_foreground),
      kinds, params);
}

FeatureSet describe_file(const std::filesystem::path& path,
                         std::span<const DescriptorKind> kinds,
                         const ExtractionParams& params) {
  return describe_image(read_image(path), kinds, params);
}

ExtractionResult extract_all(const std::vector<ManifestRecord>& records,
                             const std::filesystem::path& manifest_path,
                             std::span<const DescriptorKind> kinds,
                             const ExtractionParams& params) {
  validate(params);
  const int n = static_cast<int>(records.size());
  const std::size_t nk = kinds.size();
  std::vector<FeatureSet> sets(records.size());
  std::vector<std::string> errors(records.size());
  std::vector<double> times(records.size() * nk, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      const auto image =
          read_image(resolve_record_path(manifest_path, records[i]));
      const auto s = extract_silhouette(image, params.threshold,
                                        params.dark_foreground);
      for (std::size_t k = 0; k < nk; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        auto one = describe(s, kinds.subspan(k, 1), params);
        sets[i].merge(one);
        times[i * nk + k] = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
      }
    } catch (const std::exception& e) {
      errors[i] = e.what();
      sets[i].clear();
    }
  }
  ExtractionResult result;
  for (std::size_t k = 0; k < nk; ++k) {
    const DescriptorKind kind = kinds[k];
    auto& column = result.vectors[kind];
    column.resize(records.size(), FeatureVector{kind, {}});
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      auto it = sets[i].find(kind);
      if (it != sets[i].end()) column[i] = std::move(it->second);
      total += times[i * nk + k];
    }
    result.seconds[kind] = total;
  }
  for (int i = 0; i < n; ++i) {
    if (!errors[i].empty())
      result.failures.push_back({i, records[i].path, errors[i]});
  }
  return result;
}

}  // namespace leafshape
