#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "langid/detector.hpp"
#include "langid/source_sample.hpp"

namespace langid {

enum class SpanKind { String, Block, Line };

struct RemovedSpan {
  std::size_t line_index = 0;
  std::size_t start_col = 0;
  std::size_t end_col = 0;
  SpanKind kind = SpanKind::String;

  bool operator==(const RemovedSpan&) const = default;
};

/// Sample text with detected comment/string content cut out, so embedded
/// natural language cannot bias the statistics.
struct MaskedText {
  std::vector<std::string> lines;
  std::vector<RemovedSpan> removed_spans;
};

/// Removes string literals (same-line delimiter pairs), block comments
/// (opener through closer, delimiters included) and line comments (token to
/// end of line). A block opener with no closer masks through end of file.
/// An unpaired string delimiter is left alone.
inline MaskedText mask(const SourceSample& sample, const TokenFindings& findings) {
  const std::string* str_tok = findings.string_tokens.empty()
                                   ? nullptr
                                   : &findings.string_tokens.front().first;
  const std::string* open_tok = findings.block_pairs.empty()
                                    ? nullptr
                                    : &findings.block_pairs.front().first.first;
  const std::string* close_tok = findings.block_pairs.empty()
                                     ? nullptr
                                     : &findings.block_pairs.front().first.second;
  const std::string* line_tok =
      findings.line_tokens.empty() ? nullptr : &findings.line_tokens.front().first;

  MaskedText out;
  out.lines.reserve(sample.lines.size());
  bool in_block = false;

  for (std::size_t li = 0; li < sample.lines.size(); ++li) {
    const std::string& line = sample.lines[li];
    std::vector<RemovedSpan> spans;
    std::size_t pos = 0;

    while (pos <= line.size()) {
      if (in_block) {
        std::size_t q = line.find(*close_tok, pos);
        if (q == std::string::npos) {
          if (pos < line.size()) spans.push_back({li, pos, line.size(), SpanKind::Block});
          pos = line.size();
          break;
        }
        spans.push_back({li, pos, q + close_tok->size(), SpanKind::Block});
        pos = q + close_tok->size();
        in_block = false;
        continue;
      }

      // Earliest finding token from `pos`; the longest wins a shared start.
      std::size_t best_pos = std::string::npos;
      int best_kind = -1;  // 0 = string, 1 = block, 2 = line
      std::size_t best_len = 0;
      auto offer = [&](const std::string* tok, int kind) {
        if (!tok) return;
        std::size_t p = line.find(*tok, pos);
        if (p == std::string::npos) return;
        if (p < best_pos || (p == best_pos && tok->size() > best_len)) {
          best_pos = p;
          best_kind = kind;
          best_len = tok->size();
        }
      };
      offer(str_tok, 0);
      offer(open_tok, 1);
      offer(line_tok, 2);
      if (best_kind < 0) break;

      if (best_kind == 0) {
        std::size_t q = line.find(*str_tok, best_pos + str_tok->size());
        if (q == std::string::npos) {
          pos = best_pos + str_tok->size();  // lone delimiter, not a literal
        } else {
          spans.push_back({li, best_pos, q + str_tok->size(), SpanKind::String});
          pos = q + str_tok->size();
        }
      } else if (best_kind == 1) {
        std::size_t q = line.find(*close_tok, best_pos + open_tok->size());
        if (q == std::string::npos) {
          spans.push_back({li, best_pos, line.size(), SpanKind::Block});
          pos = line.size();
          in_block = true;
          break;
        }
        spans.push_back({li, best_pos, q + close_tok->size(), SpanKind::Block});
        pos = q + close_tok->size();
      } else {
        if (best_pos < line.size())
          spans.push_back({li, best_pos, line.size(), SpanKind::Line});
        pos = line.size();
        break;
      }
    }

    std::string masked;
    std::size_t keep_from = 0;
    for (const RemovedSpan& s : spans) {
      masked.append(line, keep_from, s.start_col - keep_from);
      keep_from = s.end_col;
    }
    masked.append(line, keep_from, line.size() - keep_from);
    out.lines.push_back(std::move(masked));
    for (RemovedSpan& s : spans) out.removed_spans.push_back(s);
  }
  return out;
}

}  // namespace langid
