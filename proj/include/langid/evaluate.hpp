#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "langid/corpus.hpp"
#include "langid/scorer.hpp"

namespace langid {

/// Batch identification tally: where the true language landed in each
/// file's ranking. Ranks past 5 bucket as misses.
struct EvalResult {
  std::uint64_t total = 0;
  std::array<std::uint64_t, 5> rank_counts{};  // index r-1 holds rank r
  std::uint64_t misses = 0;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> per_language;

  void record(const std::string& language, std::size_t rank) {
    ++total;
    auto& [files, correct] = per_language[language];
    ++files;
    if (rank == 1) ++correct;
    if (rank >= 1 && rank <= 5) {
      ++rank_counts[rank - 1];
    } else {
      ++misses;
    }
  }

  double top_k_accuracy(int k) const {
    if (total == 0) return 0.0;
    std::uint64_t hits = 0;
    for (int r = 1; r <= k && r <= 5; ++r) hits += rank_counts[r - 1];
    return static_cast<double>(hits) / static_cast<double>(total);
  }

  bool operator==(const EvalResult&) const = default;
};

/// Identifies every corpus file against the model. Only the sample text
/// reaches the scorer; the path and extension serve as ground truth alone.
inline EvalResult evaluate_corpus(const std::filesystem::path& corpus_dir,
                                  const Model& model, const TokenDatabase& db,
                                  const ExtensionMap& map, WalkStats* stats_out = nullptr) {
  EvalResult result;
  WalkStats stats = walk_corpus(corpus_dir, map, [&](SourceSample&& sample) {
    const std::string& truth = *sample.label;
    if (!model.find(truth))
      throw std::runtime_error("corpus language not present in model: " + truth);
    ScoreReport report = identify(sample, model, db);
    result.record(truth, report.rank_of(truth));
  });
  if (stats_out) *stats_out = stats;
  if (result.total == 0) throw std::runtime_error("no samples found in corpus: " + corpus_dir.string());
  return result;
}

}  // namespace langid
