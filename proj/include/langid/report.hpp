#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "langid/evaluate.hpp"
#include "langid/features.hpp"
#include "langid/scorer.hpp"

namespace langid {

namespace detail {

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

inline std::string percent(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * v);
  return buf;
}

}  // namespace detail

/// One `kind<TAB>token[<TAB>closer]<TAB>count` line per finding.
inline std::string findings_to_tsv(const TokenFindings& findings) {
  std::string out;
  for (const auto& [tok, n] : findings.string_tokens)
    out += "string\t" + tok + "\t" + std::to_string(n) + "\n";
  for (const auto& [pair, n] : findings.block_pairs)
    out += "block\t" + pair.first + "\t" + pair.second + "\t" + std::to_string(n) + "\n";
  for (const auto& [tok, n] : findings.line_tokens)
    out += "line\t" + tok + "\t" + std::to_string(n) + "\n";
  return out;
}

inline nlohmann::json findings_to_json(const TokenFindings& findings) {
  nlohmann::json j;
  j["string"] = nlohmann::json::array();
  for (const auto& [tok, n] : findings.string_tokens) j["string"].push_back({tok, n});
  j["block"] = nlohmann::json::array();
  for (const auto& [pair, n] : findings.block_pairs)
    j["block"].push_back({pair.first, pair.second, n});
  j["line"] = nlohmann::json::array();
  for (const auto& [tok, n] : findings.line_tokens) j["line"].push_back({tok, n});
  return j;
}

inline nlohmann::json observation_to_json(const FeatureObservation& obs) {
  nlohmann::json j;
  j["bracket_dist"] = obs.bracket_dist;
  j["first_words"] = obs.first_words;
  j["keywords"] = obs.keywords;
  j["last_chars"] = obs.last_chars;
  j["operators"] = obs.operators;
  j["punct_ratio"] = {obs.punct_ratio_a, obs.punct_ratio_x};
  j["tokens"] = findings_to_json(obs.token_findings);
  return j;
}

/// Aligned top-k table with one language per row.
inline std::string report_to_table(const ScoreReport& report, int top_k) {
  std::size_t rows = std::min<std::size_t>(top_k, report.ranking.size());
  std::size_t width = 8;  // "language"
  for (std::size_t i = 0; i < rows; ++i)
    width = std::max(width, report.ranking[i].first.size());
  std::string out = "rank  language";
  out.append(width - 8, ' ');
  out += "  total\n";
  for (std::size_t i = 0; i < rows; ++i) {
    char rank[16];
    std::snprintf(rank, sizeof(rank), "%4zu", i + 1);
    out += rank;
    out += "  " + report.ranking[i].first;
    out.append(width - report.ranking[i].first.size(), ' ');
    out += "  " + detail::fixed6(report.ranking[i].second) + "\n";
  }
  return out;
}

inline nlohmann::json report_to_json(const ScoreReport& report, int top_k) {
  nlohmann::json j;
  j["degenerate_input"] = report.degenerate_input;
  nlohmann::json ranking = nlohmann::json::array();
  std::size_t rows = std::min<std::size_t>(top_k, report.ranking.size());
  for (std::size_t i = 0; i < rows; ++i)
    ranking.push_back({report.ranking[i].first, report.ranking[i].second});
  j["ranking"] = std::move(ranking);
  j["totals"] = report.totals;
  nlohmann::json per_feature;
  for (const auto& [feature, scores] : report.per_feature) {
    nlohmann::json langs;
    for (const auto& [lang, score] : scores)
      langs[lang] = {{"raw", score.raw}, {"normalized", score.normalized}};
    per_feature[feature] = std::move(langs);
  }
  j["per_feature"] = std::move(per_feature);
  return j;
}

inline std::string eval_to_text(const EvalResult& result) {
  std::string out = "files evaluated: " + std::to_string(result.total) + "\n";
  for (int r = 1; r <= 5; ++r) {
    double frac = result.total
                      ? static_cast<double>(result.rank_counts[r - 1]) /
                            static_cast<double>(result.total)
                      : 0.0;
    out += "correct at rank " + std::to_string(r) + ": " +
           std::to_string(result.rank_counts[r - 1]) + " (" + detail::percent(frac) + ")\n";
  }
  double miss_frac =
      result.total ? static_cast<double>(result.misses) / static_cast<double>(result.total)
                   : 0.0;
  out += "missed (beyond rank 5): " + std::to_string(result.misses) + " (" +
         detail::percent(miss_frac) + ")\n";
  for (int k = 1; k <= 5; ++k)
    out += "top-" + std::to_string(k) + " accuracy: " +
           detail::percent(result.top_k_accuracy(k)) + "\n";
  out += "per-language results:\n";
  std::size_t width = 0;
  for (const auto& [lang, counts] : result.per_language)
    width = std::max(width, lang.size());
  for (const auto& [lang, counts] : result.per_language) {
    out += "  " + lang;
    out.append(width - lang.size(), ' ');
    out += "  " + std::to_string(counts.first) + " files, " +
           std::to_string(counts.second) + " correct at rank 1\n";
  }
  return out;
}

inline nlohmann::json eval_to_json(const EvalResult& result) {
  nlohmann::json j;
  j["total"] = result.total;
  nlohmann::json hist;
  for (int r = 1; r <= 5; ++r) hist[std::to_string(r)] = result.rank_counts[r - 1];
  hist["miss"] = result.misses;
  j["rank_histogram"] = std::move(hist);
  nlohmann::json topk;
  for (int k = 1; k <= 5; ++k) topk[std::to_string(k)] = result.top_k_accuracy(k);
  j["top_k_accuracy"] = std::move(topk);
  nlohmann::json per_lang;
  for (const auto& [lang, counts] : result.per_language)
    per_lang[lang] = {{"files", counts.first}, {"correct_at_1", counts.second}};
  j["per_language"] = std::move(per_lang);
  return j;
}

}  // namespace langid
