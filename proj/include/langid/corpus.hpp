#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "langid/extension_map.hpp"
#include "langid/source_sample.hpp"
#include "langid/text.hpp"

namespace langid {

inline constexpr std::size_t kMaxSampleBytes = 1u << 20;  // 1 MiB cap per file

struct WalkStats {
  std::uint64_t yielded = 0;
  std::uint64_t skipped_extension = 0;
  std::uint64_t skipped_label_mismatch = 0;
  std::uint64_t skipped_undecodable = 0;
  std::uint64_t skipped_empty = 0;
  std::set<std::string> declared_languages;  // one per top-level directory

  std::uint64_t skipped() const {
    return skipped_extension + skipped_label_mismatch + skipped_undecodable +
           skipped_empty;
  }
  std::uint64_t total_files() const { return yielded + skipped(); }
};

inline std::string read_file_capped(const std::filesystem::path& path,
                                    std::size_t cap = kMaxSampleBytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::string data;
  data.resize(cap + 1);
  in.read(data.data(), static_cast<std::streamsize>(data.size()));
  data.resize(static_cast<std::size_t>(in.gcount()));
  if (data.size() > cap) {
    data.resize(cap);
    // Do not cut a UTF-8 sequence in half.
    while (!data.empty() && (static_cast<unsigned char>(data.back()) & 0xC0) == 0x80)
      data.pop_back();
    if (!data.empty() && static_cast<unsigned char>(data.back()) >= 0xC0)
      data.pop_back();
  }
  return data;
}

/// Walks `root/<language>/<files...>` (or flat files directly under root),
/// yielding one sample per file whose extension is known and, when nested
/// under a language directory, whose mapped language matches that directory
/// name (ASCII case-insensitive). Order is lexicographic by path.
inline WalkStats walk_corpus(const std::filesystem::path& root, const ExtensionMap& map,
                             const std::function<void(SourceSample&&)>& sink) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::exists(root, ec) || ec) throw std::runtime_error("corpus root does not exist: " + root.string());
  if (!fs::is_directory(root, ec) || ec) throw std::runtime_error("corpus root is not a directory: " + root.string());

  WalkStats stats;
  std::vector<fs::path> files;
  for (fs::recursive_directory_iterator it(root, ec), end; it != end; it.increment(ec)) {
    if (ec) throw std::runtime_error("error walking corpus: " + ec.message());
    if (it->is_regular_file()) files.push_back(it->path());
    if (it->is_directory() && it.depth() == 0)
      stats.declared_languages.insert(it->path().filename().string());
  }
  if (ec) throw std::runtime_error("error walking corpus: " + ec.message());
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.generic_string() < b.generic_string();
  });

  for (const fs::path& path : files) {
    auto language = lookup_extension(path, map);
    if (!language) {
      ++stats.skipped_extension;
      continue;
    }
    fs::path rel = fs::relative(path, root);
    // The first path component, when the file is nested, is the label.
    if (rel.has_parent_path()) {
      std::string dir_label = rel.begin()->string();
      if (!equals_fold(dir_label, *language)) {
        ++stats.skipped_label_mismatch;
        continue;
      }
    }
    std::string data = read_file_capped(path);
    if (data.empty()) {
      ++stats.skipped_empty;
      continue;
    }
    if (!is_valid_utf8(data)) {
      ++stats.skipped_undecodable;
      continue;
    }
    ++stats.yielded;
    sink(SourceSample::from_text(path.generic_string(), *language, std::move(data)));
  }
  return stats;
}

}  // namespace langid
