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

#include "leafshape/dataset.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <system_error>

#include "leafshape/error.hpp"

namespace leafshape {

namespace {

std::string read_text(const std::filesystem::path& path, ErrorCode missing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(missing, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes through a temporary sibling so readers never see a partial file.
void write_text(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorCode::kIo, "write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "rename " + path.string() + ": " +
                                          ec.message());
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Calls fn(line_number, line) for every line, numbering from 1.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  int number = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    fn(++number, text.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

std::string_view split_name(Split split) {
  return split == Split::kDatabase ? "db" : "query";
}

std::vector<ManifestRecord> parse_manifest(std::string_view text) {
  std::vector<ManifestRecord> records;
  std::set<std::string, std::less<>> seen;
  bool header = false;
  for_each_line(text, [&](int number, std::string_view raw) {
    const std::string_view line = trim(raw);
    if (line.empty()) return;
    const auto where = "manifest line " + std::to_string(number) + ": ";
    auto fields = split_fields(line);
    for (auto& f : fields) f = trim(f);
    if (!header) {
      if (fields.size() != 3 || fields[0] != "path" || fields[1] != "species" ||
          fields[2] != "split") {
        throw Error(ErrorCode::kParseError,
                    where + "expected header 'path,species,split'");
      }
      header = true;
      return;
    }
    if (fields.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  where + "expected 3 fields, found " +
                      std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw Error(ErrorCode::kParseError, where + "empty path");
    if (fields[1].empty()) {
      throw Error(ErrorCode::kParseError, where + "empty species");
    }
    ManifestRecord rec;
    rec.path = std::string(fields[0]);
    rec.species = std::string(fields[1]);
    if (fields[2] == "db") {
      rec.split = Split::kDatabase;
    } else if (fields[2] == "query") {
      rec.split = Split::kQuery;
    } else {
      throw Error(ErrorCode::kParseError,
                  where + "split must be 'db' or 'query', got '" +
                      std::string(fields[2]) + "'");
    }
    if (!seen.insert(rec.path).second) {
      throw Error(ErrorCode::kDuplicatePath, where + rec.path);
    }
    records.push_back(std::move(rec));
  });
  if (!header) throw Error(ErrorCode::kParseError, "manifest is empty");
  return records;
}

std::vector<ManifestRecord> load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_text(path, ErrorCode::kIo));
}

std::string format_manifest(const std::vector<ManifestRecord>& records) {
  std::string out = "path,species,split\n";
  for (const auto& r : records) {
    out += r.path;
    out += ',';
    out += r.species;
    out += ',';
    out += split_name(r.split);
    out += '\n';
  }
  return out;
}

void save_manifest(const std::filesystem::path& path,
                   const std::vector<ManifestRecord>& records) {
  write_text(path, format_manifest(records));
}

std::filesystem::path resolve_record_path(
    const std::filesystem::path& manifest_path, const ManifestRecord& record) {
  const std::filesystem::path p(record.path);
  if (p.is_absolute()) return p;
  return manifest_path.parent_path() / p;
}

void validate(const ExtractionParams& params) {
  auto bad = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  if (!(params.threshold > 0.0 && params.threshold < 1.0))
    bad("threshold must be in (0, 1)");
  if (params.zernike_order < 0 || params.zernike_order > 20)
    bad("zernike order must be in [0, 20]");
  if (params.pft.polar_r < 4 || params.pft.polar_t < 4)
    bad("polar grid must be at least 4x4");
  if (params.pft.radial_freq < 1 || params.pft.radial_freq > params.pft.polar_r)
    bad("pft radial frequencies must be in [1, polar-r]");
  if (params.pft.angular_freq < 1 ||
      params.pft.angular_freq > params.pft.polar_t)
    bad("pft angular frequencies must be in [1, polar-t]");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fingerprint(const ExtractionParams& params,
                        std::string_view manifest_text) {
  std::ostringstream os;
  os << "threshold=" << format_double(params.threshold)
     << ";dark=" << (params.dark_foreground ? 1 : 0)
     << ";zernike=" << params.zernike_order << ";pft=" << params.pft.radial_freq
     << 'x' << params.pft.angular_freq << ";polar=" << params.pft.polar_r << 'x'
     << params.pft.polar_t << ";manifest=" << std::hex
     << fnv1a64(manifest_text);
  return os.str();
}

std::filesystem::path cache_file(const std::filesystem::path& cache_dir,
                                 DescriptorKind kind) {
  return cache_dir / (std::string(kind_name(kind)) + ".csv");
}

std::filesystem::path fingerprint_file(const std::filesystem::path& cache_dir,
                                       DescriptorKind kind) {
  return cache_dir / (std::string(kind_name(kind)) + ".fingerprint");
}

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc() || r.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError,
                "not a number: '" + std::string(text) + "'");
  }
  return v;
}

void save_cache(const std::filesystem::path& cache_dir,
                const CacheTable& table) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, cache_dir.string() + ": " + ec.message());
  const std::size_t dim =
      table.vectors.empty() ? 0 : table.vectors.front().size();
  std::string text = "id";
  for (std::size_t d = 0; d < dim; ++d) text += ",f" + std::to_string(d);
  text += '\n';
  for (std::size_t i = 0; i < table.vectors.size(); ++i) {
    const auto& v = table.vectors[i];
    if (v.size() != dim || v.kind != table.kind) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "cache row " + std::to_string(i));
    }
    text += std::to_string(i);
    for (double x : v.values) {
      text += ',';
      text += format_double(x);
    }
    text += '\n';
  }
  // Fingerprint last: a table without a matching sidecar is never trusted.
  std::filesystem::remove(fingerprint_file(cache_dir, table.kind), ec);
  write_text(cache_file(cache_dir, table.kind), text);
  write_text(fingerprint_file(cache_dir, table.kind), table.fingerprint + "\n");
}

std::optional<std::string> read_fingerprint(
    const std::filesystem::path& cache_dir, DescriptorKind kind) {
  std::ifstream in(fingerprint_file(cache_dir, kind));
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line);
  return std::string(trim(line));
}

CacheTable load_cache(const std::filesystem::path& cache_dir,
                      DescriptorKind kind) {
  auto fp = read_fingerprint(cache_dir, kind);
  if (!fp) {
    throw Error(ErrorCode::kMissingCache,
                "no " + std::string(kind_name(kind)) + " cache in " +
                    cache_dir.string());
  }
  const auto path = cache_file(cache_dir, kind);
  const std::string text = read_text(path, ErrorCode::kMissingCache);
  CacheTable table;
  table.kind = kind;
  table.fingerprint = *fp;
  std::size_t dim = 0;
  bool header = false;
  for_each_line(text, [&](int number, std::string_view raw) {
    const std::string_view line = trim(raw);
    if (line.empty()) return;
    const auto fields = split_fields(line);
    const auto where = path.string() + " line " + std::to_string(number) + ": ";
    if (!header) {
      if (fields.empty() || fields[0] != "id") {
        throw Error(ErrorCode::kParseError, where + "expected 'id' header");
      }
      dim = fields.size() - 1;
      header = true;
      return;
    }
    if (fields.size() != dim + 1) {
      throw Error(ErrorCode::kParseError, where + "wrong field count");
    }
    if (fields[0] != std::to_string(table.vectors.size())) {
      throw Error(ErrorCode::kParseError, where + "ids must be 0, 1, 2, ...");
    }
    FeatureVector v{kind, {}};
    v.values.reserve(dim);
    for (std::size_t d = 1; d < fields.size(); ++d) {
      try {
        v.values.push_back(parse_double(fields[d]));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParseError, where + e.what());
      }
    }
    table.vectors.push_back(std::move(v));
  });
  if (!header) throw Error(ErrorCode::kParseError, path.string() + ": empty");
  return table;
}

}  // namespace leafshape
