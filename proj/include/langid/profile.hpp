#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "langid/features.hpp"
#include "langid/source_sample.hpp"
#include "langid/token_database.hpp"

namespace langid {

inline constexpr int kModelFormatVersion = 1;

/// Trained statistics for one language: ranked item frequencies, bracket
/// distribution, punctuation balance and the comment/string token sets.
struct LanguageProfile {
  std::string name;
  std::uint64_t file_count = 0;
  std::vector<std::pair<std::string, double>> first_words;
  std::vector<std::pair<std::string, double>> keywords;
  std::vector<std::pair<std::string, double>> last_chars;
  std::vector<std::pair<std::string, double>> operators;
  std::array<double, 4> bracket_dist{};
  double punct_b = 0.0;
  double punct_y = 0.0;
  std::set<std::string> string_tokens;
  std::set<std::pair<std::string, std::string>> block_pairs;
  std::set<std::string> line_tokens;

  bool operator==(const LanguageProfile&) const = default;
};

struct Model {
  int format_version = kModelFormatVersion;
  std::map<std::string, int> feature_depths;
  std::vector<LanguageProfile> languages;  // sorted by name

  const LanguageProfile* find(const std::string& name) const {
    for (const LanguageProfile& p : languages)
      if (p.name == name) return &p;
    return nullptr;
  }

  bool operator==(const Model&) const = default;
};

inline std::map<std::string, int> default_feature_depths() {
  return {{"first_words", 20}, {"keywords", 50}, {"last_chars", 15}, {"operators", 30}};
}

struct TrainOptions {
  std::map<std::string, int> feature_depths = default_feature_depths();
  // A token enters the profile when at least this share of the language's
  // files produced it.
  double token_keep_fraction = 0.10;
};

/// Pools per-file counts into per-language profiles. Merging is commutative,
/// so the resulting model does not depend on sample order.
class TrainingAccumulator {
 public:
  explicit TrainingAccumulator(TokenDatabase db, TrainOptions options = {})
      : db_(std::move(db)), options_(std::move(options)) {
    for (const auto& [feature, depth] : options_.feature_depths)
      if (depth < 1) throw std::runtime_error("feature depth must be >= 1: " + feature);
  }

  void add(const SourceSample& sample) {
    if (!sample.label) throw std::runtime_error("training sample has no label: " + sample.origin);
    TokenFindings findings = detect_all(sample, db_);
    MaskedText masked = mask(sample, findings);
    LanguageAccum& acc = languages_[*sample.label];
    acc.counts.merge(count_features(masked));
    ++acc.files;
    for (const auto& [tok, n] : findings.string_tokens) ++acc.string_token_files[tok];
    for (const auto& [pair, n] : findings.block_pairs) ++acc.block_pair_files[pair];
    for (const auto& [tok, n] : findings.line_tokens) ++acc.line_token_files[tok];
  }

  Model finish() const {
    if (languages_.empty()) throw std::runtime_error("no samples to train on");
    Model model;
    model.feature_depths = options_.feature_depths;
    for (const auto& [name, acc] : languages_) {
      LanguageProfile p;
      p.name = name;
      p.file_count = acc.files;
      p.first_words = ranked(acc.counts.first_words, acc.counts.nonblank_lines,
                             depth("first_words"));
      p.keywords = ranked(acc.counts.keywords, acc.counts.keyword_total, depth("keywords"));
      p.last_chars = ranked(acc.counts.last_chars, acc.counts.nonblank_lines,
                            depth("last_chars"));
      p.operators = ranked(acc.counts.operators, acc.counts.operator_total,
                           depth("operators"));
      p.bracket_dist = bracket_fractions(acc.counts.brackets);
      std::uint64_t denom = acc.counts.punct_chars + acc.counts.letter_chars;
      if (denom > 0) {
        p.punct_b = static_cast<double>(acc.counts.punct_chars) / static_cast<double>(denom);
        p.punct_y = static_cast<double>(acc.counts.letter_chars) / static_cast<double>(denom);
      }
      double floor = options_.token_keep_fraction * static_cast<double>(acc.files);
      for (const auto& [tok, files] : acc.string_token_files)
        if (static_cast<double>(files) >= floor) p.string_tokens.insert(tok);
      for (const auto& [pair, files] : acc.block_pair_files)
        if (static_cast<double>(files) >= floor) p.block_pairs.insert(pair);
      for (const auto& [tok, files] : acc.line_token_files)
        if (static_cast<double>(files) >= floor) p.line_tokens.insert(tok);
      model.languages.push_back(std::move(p));
    }
    return model;
  }

 private:
  struct LanguageAccum {
    FeatureCounts counts;
    std::uint64_t files = 0;
    std::map<std::string, std::uint64_t> string_token_files;
    std::map<std::pair<std::string, std::string>, std::uint64_t> block_pair_files;
    std::map<std::string, std::uint64_t> line_token_files;
  };

  int depth(const std::string& feature) const {
    auto it = options_.feature_depths.find(feature);
    return it == options_.feature_depths.end() ? 1 : it->second;
  }

  static std::vector<std::pair<std::string, double>> ranked(
      const std::map<std::string, std::uint64_t>& counts, std::uint64_t denom,
      int depth) {
    std::vector<std::pair<std::string, double>> items;
    if (denom == 0) return items;
    items.reserve(counts.size());
    for (const auto& [item, n] : counts)
      items.emplace_back(item, static_cast<double>(n) / static_cast<double>(denom));
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    if (items.size() > static_cast<std::size_t>(depth)) items.resize(depth);
    return items;
  }

  TokenDatabase db_;
  TrainOptions options_;
  std::map<std::string, LanguageAccum> languages_;
};

inline Model train(const std::vector<SourceSample>& samples, const TokenDatabase& db,
                   const TrainOptions& options = {}) {
  TrainingAccumulator acc(db, options);
  for (const SourceSample& s : samples) acc.add(s);
  return acc.finish();
}

}  // namespace langid
