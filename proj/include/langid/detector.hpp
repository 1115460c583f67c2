#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "langid/source_sample.hpp"
#include "langid/text.hpp"
#include "langid/token_database.hpp"

namespace langid {

/// Span of alphabetic words that matched the words property on one line.
/// Columns are byte offsets, half-open.
struct Capture {
  std::size_t line_index = 0;
  std::size_t start_col = 0;
  std::size_t end_col = 0;
  std::size_t word_count = 0;

  bool operator==(const Capture&) const = default;
};

/// Most common token per category, with its occurrence count. Each list
/// holds at most one winner.
struct TokenFindings {
  std::vector<std::pair<std::string, std::uint64_t>> string_tokens;
  std::vector<std::pair<std::pair<std::string, std::string>, std::uint64_t>> block_pairs;
  std::vector<std::pair<std::string, std::uint64_t>> line_tokens;

  bool empty() const {
    return string_tokens.empty() && block_pairs.empty() && line_tokens.empty();
  }
  bool operator==(const TokenFindings&) const = default;
};

/// Looks for the longest sequence of alphabetic-only words separated by
/// single spaces. A sequence qualifies when it has at least two words, at
/// least two of them longer than one letter; single-letter words inside the
/// sequence still count toward its length. Ties go to the leftmost match.
inline std::optional<Capture> words_property(std::string_view line) {
  struct Word {
    std::size_t begin, end;
  };
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_ascii_letter(line[i])) {
      std::size_t b = i;
      while (i < line.size() && is_ascii_letter(line[i])) ++i;
      words.push_back({b, i});
    } else {
      ++i;
    }
  }

  std::optional<Capture> best;
  std::size_t k = 0;
  while (k < words.size()) {
    std::size_t run_end = k;
    while (run_end + 1 < words.size() &&
           words[run_end + 1].begin == words[run_end].end + 1 &&
           line[words[run_end].end] == ' ') {
      ++run_end;
    }
    std::size_t count = run_end - k + 1;
    std::size_t long_words = 0;
    for (std::size_t w = k; w <= run_end; ++w)
      if (words[w].end - words[w].begin >= 2) ++long_words;
    if (count >= 2 && long_words >= 2 && (!best || count > best->word_count)) {
      best = Capture{0, words[k].begin, words[run_end].end, count};
    }
    k = run_end + 1;
  }
  return best;
}

/// One capture per line that satisfies the words property, in line order.
inline std::vector<Capture> find_candidate_lines(const SourceSample& sample) {
  std::vector<Capture> captures;
  for (std::size_t i = 0; i < sample.lines.size(); ++i) {
    if (auto c = words_property(sample.lines[i])) {
      c->line_index = i;
      captures.push_back(*c);
    }
  }
  return captures;
}

struct StringSearchResult {
  std::map<std::string, std::uint64_t> counts;
  std::set<std::size_t> matched_lines;
};

namespace detail {

/// Last maximal non-whitespace run strictly before `end` on `line`.
inline std::optional<std::string_view> run_before(std::string_view line, std::size_t end) {
  std::size_t j = end;
  while (j > 0 && is_space_char(line[j - 1])) --j;
  if (j == 0) return std::nullopt;
  std::size_t b = j;
  while (b > 0 && !is_space_char(line[b - 1])) --b;
  return line.substr(b, j - b);
}

/// First maximal non-whitespace run at or after `begin` on `line`.
inline std::optional<std::string_view> run_after(std::string_view line, std::size_t begin) {
  std::size_t j = begin;
  while (j < line.size() && is_space_char(line[j])) ++j;
  if (j == line.size()) return std::nullopt;
  std::size_t e = j;
  while (e < line.size() && !is_space_char(line[e])) ++e;
  return line.substr(j, e - j);
}

}  // namespace detail

/// A string literal shows as the same delimiter token immediately on both
/// sides of a capture. The nearest non-whitespace run on each side must end
/// (resp. begin) with a known token; the longest such token wins the line.
inline StringSearchResult detect_strings(const SourceSample& sample,
                                         const std::vector<Capture>& captures,
                                         const TokenDatabase& db) {
  StringSearchResult result;
  for (const Capture& cap : captures) {
    const std::string& line = sample.lines[cap.line_index];
    auto left = detail::run_before(line, cap.start_col);
    auto right = detail::run_after(line, cap.end_col);
    if (!left || !right) continue;
    const std::string* best = nullptr;
    for (const std::string& tok : db.string_tokens) {
      if (tok.size() > left->size() || tok.size() > right->size()) continue;
      if (left->substr(left->size() - tok.size()) != tok) continue;
      if (right->substr(0, tok.size()) != tok) continue;
      if (!best || tok.size() > best->size() ||
          (tok.size() == best->size() && tok < *best)) {
        best = &tok;
      }
    }
    if (best) {
      ++result.counts[*best];
      result.matched_lines.insert(cap.line_index);
    }
  }
  return result;
}

/// One block-comment match: token pair plus the byte span it covers.
struct BlockMatch {
  std::size_t open_line = 0, open_col = 0;
  std::size_t close_line = 0, close_col_end = 0;
  std::string open, close;

  bool operator==(const BlockMatch&) const = default;
  auto operator<=>(const BlockMatch&) const = default;

  std::pair<std::size_t, std::size_t> begin_pos() const { return {open_line, open_col}; }
  std::pair<std::size_t, std::size_t> end_pos() const { return {close_line, close_col_end}; }
};

struct BlockSearchResult {
  std::vector<BlockMatch> matches;  // outermost survivors only
  std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
  std::set<std::size_t> matched_lines;
};

namespace detail {

struct LineToken {
  std::string text;
  std::size_t col = 0;
  bool last_on_line = false;
};

inline std::vector<LineToken> split_tokens(std::string_view line) {
  std::vector<LineToken> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_space_char(line[i])) {
      ++i;
      continue;
    }
    std::size_t b = i;
    while (i < line.size() && !is_space_char(line[i])) ++i;
    tokens.push_back({std::string(line.substr(b, i - b)), b, false});
  }
  if (!tokens.empty()) tokens.back().last_on_line = true;
  return tokens;
}

inline char mirror_char(char c) {
  switch (c) {
    case '(': return ')';
    case ')': return '(';
    case '{': return '}';
    case '}': return '{';
    case '<': return '>';
    case '>': return '<';
    case '[': return ']';
    case ']': return '[';
    default: return c;
  }
}

inline std::string mirror_reverse(const std::string& token) {
  std::string out(token.rbegin(), token.rend());
  for (char& c : out) c = mirror_char(c);
  return out;
}

/// Scores a whitespace token as a potential block opener. Database hits
/// always qualify; otherwise the token needs two of: short length, built
/// from common comment characters, sharing a special character with a known
/// opener. Single characters are too ambiguous to open a block on their own.
inline bool likely_opener(const std::string& token, const TokenDatabase& db,
                          const std::set<char>& opener_special_chars) {
  if (db.is_block_opener(token)) return true;
  if (token.size() < 2) return false;
  static constexpr std::string_view kCommentChars = "/*#(<{-!=%\"'";
  int score = 0;
  if (token.size() <= 3) ++score;
  bool all_comment_chars = true;
  bool shares_char = false;
  for (char c : token) {
    if (kCommentChars.find(c) == std::string_view::npos) all_comment_chars = false;
    if (opener_special_chars.count(c)) shares_char = true;
  }
  if (all_comment_chars) ++score;
  if (shares_char) ++score;
  return score >= 2;
}

inline std::set<char> opener_special_chars(const TokenDatabase& db) {
  std::set<char> chars;
  for (const auto& [open, close] : db.block_pairs)
    for (char c : open)
      if (!is_ascii_alnum(c)) chars.insert(c);
  return chars;
}

/// A closing token must form a known pair with the opener or be its exact
/// bracket-mirrored reverse. A closer identical to its opener is accepted
/// only at the end of a line, where block comments actually close.
inline bool closes(const std::string& opener, const LineToken& token,
                   const TokenDatabase& db) {
  if (db.is_block_pair(opener, token.text)) return true;
  if (token.text != mirror_reverse(opener)) return false;
  if (token.text != opener) return true;
  return token.last_on_line;
}

}  // namespace detail

/// From every capture the search walks left and then upward while lines keep
/// the words property, plus one extra line, scoring whitespace tokens as
/// openers. Each likely opener is paired with the first acceptable closing
/// token found scanning down and right. Matches nested inside or subsumed by
/// a surviving match are dropped; only outermost blocks remain.
inline BlockSearchResult detect_block_comments(const SourceSample& sample,
                                               const std::vector<Capture>& captures,
                                               const TokenDatabase& db) {
  BlockSearchResult result;
  if (captures.empty()) return result;

  std::vector<std::vector<detail::LineToken>> tokens;
  tokens.reserve(sample.lines.size());
  std::vector<bool> wordy(sample.lines.size(), false);
  for (const std::string& line : sample.lines) tokens.push_back(detail::split_tokens(line));
  for (std::size_t i = 0; i < sample.lines.size(); ++i)
    wordy[i] = words_property(sample.lines[i]).has_value();

  const std::set<char> special = detail::opener_special_chars(db);

  // Gather likely openers reachable from any capture, deduplicated by position.
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> openers;  // (line, token index)
  auto consider = [&](std::size_t line, std::size_t idx) {
    if (!detail::likely_opener(tokens[line][idx].text, db, special)) return;
    if (seen.insert({line, idx}).second) openers.emplace_back(line, idx);
  };
  for (const Capture& cap : captures) {
    const auto& row = tokens[cap.line_index];
    for (std::size_t t = row.size(); t-- > 0;) {
      if (row[t].col + row[t].text.size() <= cap.start_col) consider(cap.line_index, t);
    }
    std::size_t line = cap.line_index;
    while (line-- > 0) {
      for (std::size_t t = tokens[line].size(); t-- > 0;) consider(line, t);
      if (!wordy[line]) break;  // one extra line past the wordy region
    }
  }

  // Pair each opener with the first acceptable closer down and right.
  std::set<BlockMatch> matches;
  for (const auto& [line, idx] : openers) {
    const detail::LineToken& open = tokens[line][idx];
    bool found = false;
    for (std::size_t l = line; l < tokens.size() && !found; ++l) {
      std::size_t start = (l == line) ? idx + 1 : 0;
      for (std::size_t t = start; t < tokens[l].size(); ++t) {
        if (detail::closes(open.text, tokens[l][t], db)) {
          matches.insert({line, open.col, l, tokens[l][t].col + tokens[l][t].text.size(),
                          open.text, tokens[l][t].text});
          found = true;
          break;
        }
      }
    }
  }

  // Keep only outermost spans: nested same-token blocks collapse to the
  // outer pair, and differently-delimited blocks inside another are noise.
  for (const BlockMatch& m : matches) {
    bool inside = false;
    for (const BlockMatch& outer : matches) {
      if (outer.begin_pos() == m.begin_pos() && outer.end_pos() == m.end_pos()) continue;
      if (outer.begin_pos() <= m.begin_pos() && m.end_pos() <= outer.end_pos()) {
        inside = true;
        break;
      }
    }
    if (!inside) result.matches.push_back(m);
  }
  for (const BlockMatch& m : result.matches) {
    ++result.counts[{m.open, m.close}];
    for (std::size_t l = m.open_line; l <= m.close_line; ++l) result.matched_lines.insert(l);
  }
  return result;
}

struct LineSearchResult {
  std::map<std::string, std::uint64_t> counts;  // already combined
  std::set<std::size_t> matched_lines;
};

/// Folds each token into the shortest observed token that prefixes it, so
/// ";;", ";(" and ";" all collapse to ";". Idempotent.
inline std::map<std::string, std::uint64_t> combine_line_tokens(
    const std::map<std::string, std::uint64_t>& counts) {
  std::vector<std::string> order;
  order.reserve(counts.size());
  for (const auto& [tok, n] : counts) order.push_back(tok);
  std::sort(order.begin(), order.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::map<std::string, std::uint64_t> combined;
  std::vector<std::string> kept;
  for (const std::string& tok : order) {
    const std::string* target = &tok;
    for (const std::string& k : kept) {
      if (tok.size() > k.size() && tok.compare(0, k.size(), k) == 0) {
        target = &k;
        break;
      }
    }
    if (target == &tok) kept.push_back(tok);
    combined[*target] += counts.at(tok);
  }
  return combined;
}

/// The leftmost run of non-alphanumeric characters on a remaining candidate
/// line, leading whitespace stripped, is a line-comment token candidate.
inline LineSearchResult detect_line_comments(const SourceSample& sample,
                                             const std::vector<Capture>& captures) {
  std::map<std::string, std::uint64_t> raw;
  LineSearchResult result;
  for (const Capture& cap : captures) {
    const std::string& line = sample.lines[cap.line_index];
    std::size_t i = 0;
    while (i < line.size() && is_space_char(line[i])) ++i;
    std::size_t b = i;
    while (i < line.size() && !is_space_char(line[i]) && !is_ascii_alnum(line[i])) ++i;
    if (i == b) continue;
    ++raw[line.substr(b, i - b)];
    result.matched_lines.insert(cap.line_index);
  }
  result.counts = combine_line_tokens(raw);
  return result;
}

namespace detail {

template <typename Map>
inline void push_most_common(const Map& counts, auto& out) {
  if (counts.empty()) return;
  auto better = [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    if constexpr (requires { a.first.first; }) {
      std::size_t la = a.first.first.size() + a.first.second.size();
      std::size_t lb = b.first.first.size() + b.first.second.size();
      if (la != lb) return la < lb;
    } else {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    }
    return a.first < b.first;
  };
  auto best = counts.begin();
  for (auto it = std::next(counts.begin()); it != counts.end(); ++it)
    if (better(*it, *best)) best = it;
  out.push_back(*best);
}

}  // namespace detail

struct DetectionResult {
  TokenFindings findings;
  std::set<std::size_t> string_lines;
  std::set<std::size_t> block_lines;
  std::set<std::size_t> line_comment_lines;
};

/// Runs the three searches in order. Lines consumed by one search are out of
/// play for the rest, so the reported per-stage line sets are disjoint.
inline DetectionResult detect_all_detailed(const SourceSample& sample,
                                           const TokenDatabase& db) {
  DetectionResult result;
  std::vector<Capture> captures = find_candidate_lines(sample);

  StringSearchResult strings = detect_strings(sample, captures, db);
  result.string_lines = strings.matched_lines;

  std::vector<Capture> remaining;
  for (const Capture& c : captures)
    if (!strings.matched_lines.count(c.line_index)) remaining.push_back(c);
  BlockSearchResult blocks = detect_block_comments(sample, remaining, db);
  for (std::size_t l : blocks.matched_lines)
    if (!result.string_lines.count(l)) result.block_lines.insert(l);

  std::vector<Capture> rest;
  for (const Capture& c : remaining)
    if (!blocks.matched_lines.count(c.line_index)) rest.push_back(c);
  LineSearchResult lines = detect_line_comments(sample, rest);
  result.line_comment_lines = lines.matched_lines;

  detail::push_most_common(strings.counts, result.findings.string_tokens);
  detail::push_most_common(blocks.counts, result.findings.block_pairs);
  detail::push_most_common(lines.counts, result.findings.line_tokens);
  return result;
}

inline TokenFindings detect_all(const SourceSample& sample, const TokenDatabase& db) {
  return detect_all_detailed(sample, db).findings;
}

}  // namespace langid
