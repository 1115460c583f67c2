#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "langid/text.hpp"

namespace langid {

/// One piece of source code, from a file or stdin. Line endings are
/// normalized to '\n' so that joining `lines` with '\n' reproduces `text`
/// up to a single trailing newline.
struct SourceSample {
  std::string origin;
  std::optional<std::string> label;
  std::string text;
  std::vector<std::string> lines;

  static SourceSample from_text(std::string origin, std::optional<std::string> label,
                                std::string raw) {
    SourceSample s;
    s.origin = std::move(origin);
    s.label = std::move(label);
    s.text = normalize_newlines(std::move(raw));
    s.lines = split_lines(s.text);
    return s;
  }

  static std::string normalize_newlines(std::string raw) {
    // Strip a UTF-8 BOM and fold CRLF / lone CR to LF.
    std::string out;
    out.reserve(raw.size());
    std::size_t start = 0;
    if (raw.size() >= 3 && static_cast<unsigned char>(raw[0]) == 0xEF &&
        static_cast<unsigned char>(raw[1]) == 0xBB &&
        static_cast<unsigned char>(raw[2]) == 0xBF) {
      start = 3;
    }
    for (std::size_t i = start; i < raw.size(); ++i) {
      if (raw[i] == '\r') {
        out.push_back('\n');
        if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
      } else {
        out.push_back(raw[i]);
      }
    }
    return out;
  }
};

}  // namespace langid
