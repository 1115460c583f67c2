#pragma once

#include <set>
#include <string>
#include <utility>

namespace langid {

/// Seed knowledge for the comment/string searches: string delimiters and
/// common block-comment pairs. Tokens are non-empty and whitespace-free.
/// Immutable after construction; safe to share across threads.
struct TokenDatabase {
  std::set<std::string> string_tokens;
  std::set<std::pair<std::string, std::string>> block_pairs;

  bool is_string_token(const std::string& t) const { return string_tokens.count(t) > 0; }

  bool is_block_opener(const std::string& t) const {
    for (const auto& [open, close] : block_pairs)
      if (open == t) return true;
    return false;
  }

  bool is_block_pair(const std::string& open, const std::string& close) const {
    return block_pairs.count({open, close}) > 0;
  }
};

inline TokenDatabase default_token_database() {
  TokenDatabase db;
  db.string_tokens = {"\"", "'", "`", "\"\"\"", "'''"};
  db.block_pairs = {
      {"/*", "*/"},     {"(*", "*)"},           {"<!--", "-->"},
      {"{-", "-}"},     {"\"\"\"", "\"\"\""},   {"=begin", "=end"},
  };
  return db;
}

}  // namespace langid
