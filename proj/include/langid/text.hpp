#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace langid {

inline bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_ascii_alnum(char c) { return is_ascii_letter(c) || is_ascii_digit(c); }

// The 32 printable non-alphanumeric characters of the basic character set.
inline bool is_ascii_punct(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u > 0x20 && u < 0x7f && !is_ascii_alnum(c);
}

inline bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(ascii_lower(c));
  return out;
}

inline bool equals_fold(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
  return true;
}

inline bool is_blank(std::string_view line) {
  for (char c : line)
    if (!is_space_char(c)) return false;
  return true;
}

/// Splits on '\n'; the newline itself is not part of any line.
inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

/// Decodes one UTF-8 sequence starting at `i`; returns the code point and
/// advances `i`, or returns nullopt on malformed input (i advances by one).
inline std::optional<char32_t> decode_utf8(std::string_view s, std::size_t& i) {
  unsigned char c0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  if (c0 < 0x80) {
    i += 1;
    return static_cast<char32_t>(c0);
  }
  if ((c0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = ((c0 & 0x1Fu) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
    i += 2;
    if (cp < 0x80) return std::nullopt;
    return cp;
  }
  if ((c0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = ((c0 & 0x0Fu) << 12) |
                  ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6) |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
    i += 3;
    if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
    return cp;
  }
  if ((c0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = ((c0 & 0x07u) << 18) |
                  ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12) |
                  ((static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6) |
                  (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
    i += 4;
    if (cp < 0x10000 || cp > 0x10FFFF) return std::nullopt;
    return cp;
  }
  i += 1;
  return std::nullopt;
}

inline bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (!decode_utf8(s, i)) return false;
  }
  return true;
}

/// Letter classification for the punctuation/letter ratio. Basic letters plus
/// the common non-ASCII letter blocks; coarse by intent, code is ASCII-heavy.
inline bool is_letter_codepoint(char32_t cp) {
  if (cp < 0x80) return is_ascii_letter(static_cast<char>(cp));
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0xC0 && cp <= 0x24F) return true;    // Latin supplements
  if (cp >= 0x370 && cp <= 0x3FF) return true;   // Greek
  if (cp >= 0x400 && cp <= 0x4FF) return true;   // Cyrillic
  if (cp >= 0x530 && cp <= 0x58F) return true;   // Armenian
  if (cp >= 0x590 && cp <= 0x5FF) return true;   // Hebrew
  if (cp >= 0x600 && cp <= 0x6FF) return true;   // Arabic
  if (cp >= 0x3040 && cp <= 0x30FF) return true; // Kana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true; // CJK
  if (cp >= 0xAC00 && cp <= 0xD7AF) return true; // Hangul
  return false;
}

}  // namespace langid
