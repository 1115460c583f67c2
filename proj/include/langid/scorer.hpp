#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "langid/features.hpp"
#include "langid/profile.hpp"
#include "langid/source_sample.hpp"

namespace langid {

/// Caps the inverse formulas: an exact match scores 1/eps (or 1/sqrt(eps))
/// instead of blowing up, and normalization keeps it commensurate.
inline constexpr double kScoreEpsilon = 1e-9;

inline const std::vector<std::string>& feature_names() {
  static const std::vector<std::string> names = {
      "brackets",   "comments_strings", "first_words", "keywords",
      "last_chars", "operators",        "punctuation"};
  return names;
}

/// Inverse mean squared relative residual over the language's top-n items.
/// Items the sample lacks contribute a full residual of 1. Averaging over
/// the terms actually present keeps short profile lists comparable.
inline double score_ranked(const std::vector<std::pair<std::string, double>>& profile,
                           const std::map<std::string, double>& observed, int n) {
  if (profile.empty()) return 0.0;
  std::size_t terms = std::min(static_cast<std::size_t>(n), profile.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < terms; ++i) {
    double p = profile[i].second;
    auto it = observed.find(profile[i].first);
    double x = (it == observed.end()) ? 0.0 : it->second;
    double r = (p - x) / p;
    sum += r * r;
  }
  double mean = sum / static_cast<double>(terms);
  return 1.0 / std::max(mean, kScoreEpsilon);
}

/// Inverse squared distance between bracket distributions.
inline double score_brackets(const std::array<double, 4>& profile,
                             const std::array<double, 4>& observed) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double d = profile[i] - observed[i];
    sum += d * d;
  }
  return 1.0 / std::max(sum, kScoreEpsilon);
}

/// Number of detected tokens that match the profile exactly, one per
/// category entry.
inline double score_tokens(const LanguageProfile& profile, const TokenFindings& findings) {
  std::uint64_t matches = 0;
  for (const auto& [tok, n] : findings.string_tokens)
    if (profile.string_tokens.count(tok)) ++matches;
  for (const auto& [pair, n] : findings.block_pairs)
    if (profile.block_pairs.count(pair)) ++matches;
  for (const auto& [tok, n] : findings.line_tokens)
    if (profile.line_tokens.count(tok)) ++matches;
  return static_cast<double>(matches);
}

/// Inverse root distance between punctuation/letter balances.
inline double score_punct(double profile_b, double profile_y, double observed_a,
                          double observed_x) {
  double sum = std::abs(observed_a - profile_b) + std::abs(observed_x - profile_y);
  return 1.0 / std::sqrt(std::max(sum, kScoreEpsilon));
}

/// Rescales one feature's scores to sum to 1 across languages; an all-zero
/// feature degenerates to the uniform distribution.
inline std::map<std::string, double> normalize_scores(
    const std::map<std::string, double>& raw) {
  std::map<std::string, double> out;
  if (raw.empty()) return out;
  double sum = 0.0;
  for (const auto& [lang, s] : raw) sum += s;
  if (sum <= 0.0) {
    double uniform = 1.0 / static_cast<double>(raw.size());
    for (const auto& [lang, s] : raw) out[lang] = uniform;
    return out;
  }
  for (const auto& [lang, s] : raw) out[lang] = s / sum;
  return out;
}

struct FeatureScore {
  double raw = 0.0;
  double normalized = 0.0;

  bool operator==(const FeatureScore&) const = default;
};

struct ScoreReport {
  std::map<std::string, std::map<std::string, FeatureScore>> per_feature;
  std::map<std::string, double> totals;
  std::vector<std::pair<std::string, double>> ranking;  // total descending
  bool degenerate_input = false;

  /// 1-based position of `language` in the ranking; 0 when absent.
  std::size_t rank_of(const std::string& language) const {
    for (std::size_t i = 0; i < ranking.size(); ++i)
      if (ranking[i].first == language) return i + 1;
    return 0;
  }
};

namespace detail {

inline void finalize_report(ScoreReport& report,
                            const std::map<std::string, std::map<std::string, double>>& raws) {
  for (const auto& [feature, raw] : raws) {
    std::map<std::string, double> norm = normalize_scores(raw);
    for (const auto& [lang, value] : raw) {
      report.per_feature[feature][lang] = {value, norm[lang]};
      report.totals[lang] += norm[lang];
    }
  }
  report.ranking.assign(report.totals.begin(), report.totals.end());
  std::sort(report.ranking.begin(), report.ranking.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
}

}  // namespace detail

inline int feature_depth(const Model& model, const std::string& feature) {
  auto it = model.feature_depths.find(feature);
  if (it != model.feature_depths.end()) return it->second;
  return default_feature_depths().at(feature);
}

/// Scores the sample against every language on all seven features,
/// normalizes each feature across languages, and ranks by summed score.
/// An empty or whitespace-only sample yields a flagged uniform report.
inline ScoreReport identify(const SourceSample& sample, const Model& model,
                            const TokenDatabase& db) {
  if (model.languages.empty()) throw std::runtime_error("model has no languages");

  ScoreReport report;
  if (is_blank(sample.text)) {
    report.degenerate_input = true;
    double uniform = 1.0 / static_cast<double>(model.languages.size());
    for (const std::string& feature : feature_names()) {
      for (const LanguageProfile& p : model.languages) {
        report.per_feature[feature][p.name] = {0.0, uniform};
        report.totals[p.name] += uniform;
      }
    }
    report.ranking.assign(report.totals.begin(), report.totals.end());
    std::sort(report.ranking.begin(), report.ranking.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
    return report;
  }

  FeatureObservation obs = extract_all(sample, db);
  std::map<std::string, std::map<std::string, double>> raws;
  for (const LanguageProfile& p : model.languages) {
    raws["brackets"][p.name] = score_brackets(p.bracket_dist, obs.bracket_dist);
    raws["comments_strings"][p.name] = score_tokens(p, obs.token_findings);
    raws["first_words"][p.name] =
        score_ranked(p.first_words, obs.first_words, feature_depth(model, "first_words"));
    raws["keywords"][p.name] =
        score_ranked(p.keywords, obs.keywords, feature_depth(model, "keywords"));
    raws["last_chars"][p.name] =
        score_ranked(p.last_chars, obs.last_chars, feature_depth(model, "last_chars"));
    raws["operators"][p.name] =
        score_ranked(p.operators, obs.operators, feature_depth(model, "operators"));
    raws["punctuation"][p.name] =
        score_punct(p.punct_b, p.punct_y, obs.punct_ratio_a, obs.punct_ratio_x);
  }
  detail::finalize_report(report, raws);
  return report;
}

}  // namespace langid
