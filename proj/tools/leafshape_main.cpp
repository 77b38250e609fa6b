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

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "leafshape/commands.hpp"
#include "leafshape/error.hpp"

namespace {

using leafshape::DescriptorKind;

std::vector<DescriptorKind> parse_kinds(const std::string& list) {
  std::vector<DescriptorKind> kinds;
  if (list == "all") {
    return {leafshape::kSingleKinds.begin(), leafshape::kSingleKinds.end()};
  }
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto kind = leafshape::parse_kind(item);
    if (!kind || *kind == DescriptorKind::kCombined) {
      throw CLI::ValidationError("--kinds", "unknown descriptor kind '" + item +
                                                "'");
    }
    kinds.push_back(*kind);
  }
  if (kinds.empty()) throw CLI::ValidationError("--kinds", "empty list");
  return kinds;
}

void add_extraction_flags(CLI::App* app, leafshape::RunConfig& cfg,
                          std::string& kinds) {
  app->add_option("--manifest", cfg.manifest, "Manifest CSV (path,species,split)")
      ->required();
  app->add_option("--kinds", kinds,
                  "Comma-separated kinds: geometric,hu_raw,hu_normalized,"
                  "zernike,pft (or 'all')")
      ->capture_default_str();
  app->add_option("--threshold", cfg.params.threshold, "Binarization threshold")
      ->capture_default_str();
  app->add_flag("--dark-foreground,!--light-foreground",
                cfg.params.dark_foreground,
                "Leaf is darker than the background (default)");
  app->add_option("--zernike-order", cfg.params.zernike_order)
      ->capture_default_str();
  app->add_option("--pft-radial", cfg.params.pft.radial_freq,
                  "PFT radial frequencies")
      ->capture_default_str();
  app->add_option("--pft-angular", cfg.params.pft.angular_freq,
                  "PFT angular frequencies")
      ->capture_default_str();
  app->add_option("--polar-r", cfg.params.pft.polar_r, "Polar radial samples")
      ->capture_default_str();
  app->add_option("--polar-t", cfg.params.pft.polar_t, "Polar angular samples")
      ->capture_default_str();
  app->add_option("--out", cfg.out, "Output directory")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leaf silhouette descriptors and retrieval benchmark"};
  app.require_subcommand(1);

  leafshape::RunConfig cfg;
  std::string kinds = "all";
  std::string query_kind = "pft";

  auto* synth = app.add_subcommand("synth", "Generate a synthetic leaf set");
  synth->add_option("--classes", cfg.classes)->capture_default_str();
  synth->add_option("--db-per-class", cfg.db_per_class)->capture_default_str();
  synth->add_option("--query-per-class", cfg.query_per_class)
      ->capture_default_str();
  synth->add_option("--seed", cfg.seed)->capture_default_str();
  synth->add_option("--out", cfg.out, "Output directory")->capture_default_str();

  auto* extract = app.add_subcommand("extract", "Extract features into the cache");
  add_extraction_flags(extract, cfg, kinds);

  auto* query = app.add_subcommand("query", "Rank the database against an image");
  add_extraction_flags(query, cfg, kinds);
  query->add_option("--image", cfg.image, "Query image")->required();
  query->add_option("--kind", query_kind,
                    "Descriptor kind, or 'pft+hu' (alias 'combined')")
      ->capture_default_str();
  query->add_option("--top-k", cfg.top_k)->capture_default_str();

  auto* bench = app.add_subcommand("benchmark", "Compute P1/P3/P5 per method");
  add_extraction_flags(bench, cfg, kinds);

  try {
    app.parse(argc, argv);
    cfg.kinds = parse_kinds(kinds);
    auto qk = query_kind == leafshape::kCombinedMethod
                  ? leafshape::DescriptorKind::kCombined
                  : leafshape::parse_kind(query_kind);
    if (!qk) throw CLI::ValidationError("--kind", "unknown kind " + query_kind);
    cfg.query_kind = *qk;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return leafshape::kExitConfig;
  }

  if (*synth) return leafshape::cmd_synth(cfg, std::cout, std::cerr);
  if (*extract) return leafshape::cmd_extract(cfg, std::cout, std::cerr);
  if (*query) return leafshape::cmd_query(cfg, std::cout, std::cerr);
  return leafshape::cmd_benchmark(cfg, std::cout, std::cerr);
}
