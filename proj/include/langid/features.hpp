#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "langid/detector.hpp"
#include "langid/masker.hpp"
#include "langid/source_sample.hpp"
#include "langid/text.hpp"

namespace langid {

/// Raw tallies for the statistical features. Counts pool across files by
/// plain addition, which keeps training order-independent.
struct FeatureCounts {
  std::array<std::uint64_t, 4> brackets{};  // paren, curly, square, angle
  std::map<std::string, std::uint64_t> first_words;
  std::map<std::string, std::uint64_t> last_chars;
  std::uint64_t nonblank_lines = 0;
  std::map<std::string, std::uint64_t> keywords;
  std::uint64_t keyword_total = 0;
  std::map<std::string, std::uint64_t> operators;
  std::uint64_t operator_total = 0;
  std::uint64_t punct_chars = 0;
  std::uint64_t letter_chars = 0;

  void merge(const FeatureCounts& other) {
    for (std::size_t i = 0; i < 4; ++i) brackets[i] += other.brackets[i];
    for (const auto& [k, v] : other.first_words) first_words[k] += v;
    for (const auto& [k, v] : other.last_chars) last_chars[k] += v;
    nonblank_lines += other.nonblank_lines;
    for (const auto& [k, v] : other.keywords) keywords[k] += v;
    keyword_total += other.keyword_total;
    for (const auto& [k, v] : other.operators) operators[k] += v;
    operator_total += other.operator_total;
    punct_chars += other.punct_chars;
    letter_chars += other.letter_chars;
  }
};

inline FeatureCounts count_features(const MaskedText& m) {
  FeatureCounts c;
  for (const std::string& line : m.lines) {
    // Brackets.
    for (char ch : line) {
      switch (ch) {
        case '(': case ')': ++c.brackets[0]; break;
        case '{': case '}': ++c.brackets[1]; break;
        case '[': case ']': ++c.brackets[2]; break;
        case '<': case '>': ++c.brackets[3]; break;
        default: break;
      }
    }

    if (!is_blank(line)) {
      ++c.nonblank_lines;
      // First whitespace-delimited token.
      std::size_t b = 0;
      while (b < line.size() && is_space_char(line[b])) ++b;
      std::size_t e = b;
      while (e < line.size() && !is_space_char(line[e])) ++e;
      ++c.first_words[line.substr(b, e - b)];
      // Last non-whitespace character (full code point).
      std::size_t j = line.size();
      while (j > 0 && is_space_char(line[j - 1])) --j;
      std::size_t s = j - 1;
      while (s > 0 && (static_cast<unsigned char>(line[s]) & 0xC0) == 0x80) --s;
      ++c.last_chars[line.substr(s, j - s)];
    }

    // Keywords: maximal runs of basic letters.
    std::size_t i = 0;
    while (i < line.size()) {
      if (is_ascii_letter(line[i])) {
        std::size_t b = i;
        while (i < line.size() && is_ascii_letter(line[i])) ++i;
        ++c.keywords[line.substr(b, i - b)];
        ++c.keyword_total;
      } else {
        ++i;
      }
    }

    // Operators: maximal punctuation runs once letters and digits become spaces.
    i = 0;
    while (i < line.size()) {
      if (is_ascii_punct(line[i])) {
        std::size_t b = i;
        while (i < line.size() && is_ascii_punct(line[i])) ++i;
        ++c.operators[line.substr(b, i - b)];
        ++c.operator_total;
      } else {
        ++i;
      }
    }

    // Punctuation/letter balance over decoded code points.
    i = 0;
    while (i < line.size()) {
      char ch = line[i];
      if (static_cast<unsigned char>(ch) < 0x80) {
        if (is_ascii_punct(ch)) ++c.punct_chars;
        else if (is_ascii_letter(ch)) ++c.letter_chars;
        ++i;
      } else if (auto cp = decode_utf8(line, i)) {
        if (is_letter_codepoint(*cp)) ++c.letter_chars;
      }
    }
  }
  return c;
}

/// Per-sample feature values, all expressed as fractions so sample size
/// cancels out.
struct FeatureObservation {
  std::array<double, 4> bracket_dist{};
  std::map<std::string, double> first_words;
  std::map<std::string, double> keywords;
  std::map<std::string, double> last_chars;
  std::map<std::string, double> operators;
  double punct_ratio_a = 0.0;  // punctuation share
  double punct_ratio_x = 0.0;  // letter share
  TokenFindings token_findings;

  bool operator==(const FeatureObservation&) const = default;
};

namespace detail {

inline std::map<std::string, double> as_fractions(
    const std::map<std::string, std::uint64_t>& counts, std::uint64_t denom) {
  std::map<std::string, double> out;
  if (denom == 0) return out;
  for (const auto& [k, v] : counts)
    out[k] = static_cast<double>(v) / static_cast<double>(denom);
  return out;
}

}  // namespace detail

inline std::array<double, 4> bracket_fractions(const std::array<std::uint64_t, 4>& counts) {
  std::uint64_t total = counts[0] + counts[1] + counts[2] + counts[3];
  std::array<double, 4> out{};
  if (total == 0) return out;
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return out;
}

inline FeatureObservation to_observation(const FeatureCounts& c, TokenFindings findings) {
  FeatureObservation o;
  o.bracket_dist = bracket_fractions(c.brackets);
  o.first_words = detail::as_fractions(c.first_words, c.nonblank_lines);
  o.keywords = detail::as_fractions(c.keywords, c.keyword_total);
  o.last_chars = detail::as_fractions(c.last_chars, c.nonblank_lines);
  o.operators = detail::as_fractions(c.operators, c.operator_total);
  std::uint64_t denom = c.punct_chars + c.letter_chars;
  if (denom > 0) {
    o.punct_ratio_a = static_cast<double>(c.punct_chars) / static_cast<double>(denom);
    o.punct_ratio_x = static_cast<double>(c.letter_chars) / static_cast<double>(denom);
  }
  o.token_findings = std::move(findings);
  return o;
}

inline std::array<double, 4> extract_brackets(const MaskedText& m) {
  return bracket_fractions(count_features(m).brackets);
}

inline std::map<std::string, double> extract_first_words(const MaskedText& m) {
  FeatureCounts c = count_features(m);
  return detail::as_fractions(c.first_words, c.nonblank_lines);
}

inline std::map<std::string, double> extract_keywords(const MaskedText& m) {
  FeatureCounts c = count_features(m);
  return detail::as_fractions(c.keywords, c.keyword_total);
}

inline std::map<std::string, double> extract_last_chars(const MaskedText& m) {
  FeatureCounts c = count_features(m);
  return detail::as_fractions(c.last_chars, c.nonblank_lines);
}

inline std::map<std::string, double> extract_operators(const MaskedText& m) {
  FeatureCounts c = count_features(m);
  return detail::as_fractions(c.operators, c.operator_total);
}

inline std::pair<double, double> extract_punct_ratio(const MaskedText& m) {
  FeatureCounts c = count_features(m);
  std::uint64_t denom = c.punct_chars + c.letter_chars;
  if (denom == 0) return {0.0, 0.0};
  return {static_cast<double>(c.punct_chars) / static_cast<double>(denom),
          static_cast<double>(c.letter_chars) / static_cast<double>(denom)};
}

/// Detection, masking and every extractor in one pass.
inline FeatureObservation extract_all(const SourceSample& sample, const TokenDatabase& db) {
  TokenFindings findings = detect_all(sample, db);
  MaskedText masked = mask(sample, findings);
  return to_observation(count_features(masked), std::move(findings));
}

}  // namespace langid
