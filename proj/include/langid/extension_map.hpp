#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "langid/text.hpp"

namespace langid {

/// Maps lowercase file extensions (with the leading dot) to language names.
class ExtensionMap {
 public:
  ExtensionMap() = default;

  void set(std::string extension, std::string language) {
    entries_[to_lower(extension)] = std::move(language);
  }

  std::optional<std::string> language_for_extension(std::string_view ext) const {
    auto it = entries_.find(to_lower(ext));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<std::string, std::string>& entries() const { return entries_; }

  std::set<std::string> languages() const {
    std::set<std::string> out;
    for (const auto& [ext, lang] : entries_) out.insert(lang);
    return out;
  }

  /// Looks up a known language by name, ignoring ASCII case.
  std::optional<std::string> canonical_language(std::string_view name) const {
    for (const auto& [ext, lang] : entries_) {
      if (equals_fold(lang, name)) return lang;
    }
    return std::nullopt;
  }

  /// Merges `extension=Language` pairs from a config file. Blank lines and
  /// lines starting with '#' are ignored.
  void merge_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open extension map file: " + path.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string_view v = line;
      while (!v.empty() && is_space_char(v.front())) v.remove_prefix(1);
      while (!v.empty() && is_space_char(v.back())) v.remove_suffix(1);
      if (v.empty() || v.front() == '#') continue;
      std::size_t eq = v.find('=');
      if (eq == std::string_view::npos || eq == 0 || eq + 1 == v.size()) {
        std::ostringstream msg;
        msg << "malformed extension map line " << lineno << " in " << path.string();
        throw std::runtime_error(msg.str());
      }
      std::string ext(v.substr(0, eq));
      std::string lang(v.substr(eq + 1));
      if (ext.front() != '.') ext.insert(ext.begin(), '.');
      set(ext, lang);
    }
  }

 private:
  std::map<std::string, std::string> entries_;
};

/// Extension of the path's filename, lowercased, including the dot.
/// "Makefile" and dotfiles such as ".profile" have no extension.
inline std::optional<std::string> path_extension(const std::filesystem::path& path) {
  std::string name = path.filename().string();
  std::size_t dot = name.rfind('.');
  if (dot == std::string::npos || dot == 0) return std::nullopt;
  return to_lower(std::string_view(name).substr(dot));
}

inline std::optional<std::string> lookup_extension(const std::filesystem::path& path,
                                                   const ExtensionMap& map) {
  auto ext = path_extension(path);
  if (!ext) return std::nullopt;
  return map.language_for_extension(*ext);
}

/// Built-in map covering the standard language set. Ambiguous extensions
/// (".h", ".m") are assigned by project convention; override with a config
/// file when a corpus disagrees.
inline ExtensionMap default_extension_map() {
  ExtensionMap m;
  m.set(".as", "Actionscript");
  m.set(".ada", "Ada");
  m.set(".adb", "Ada");
  m.set(".ads", "Ada");
  m.set(".bf", "Brainfuck");
  m.set(".c", "C");
  m.set(".h", "C");
  m.set(".cs", "C#");
  m.set(".cpp", "C++");
  m.set(".cc", "C++");
  m.set(".cxx", "C++");
  m.set(".hpp", "C++");
  m.set(".hh", "C++");
  m.set(".hxx", "C++");
  m.set(".lisp", "Common Lisp");
  m.set(".lsp", "Common Lisp");
  m.set(".cl", "Common Lisp");
  m.set(".css", "CSS");
  m.set(".erl", "Erlang");
  m.set(".hrl", "Erlang");
  m.set(".hs", "Haskell");
  m.set(".html", "HTML");
  m.set(".htm", "HTML");
  m.set(".java", "Java");
  m.set(".js", "Javascript");
  m.set(".lua", "Lua");
  m.set(".m", "Matlab");
  m.set(".mm", "Objective C");
  m.set(".pl", "Perl");
  m.set(".pm", "Perl");
  m.set(".php", "PHP");
  m.set(".py", "Python");
  m.set(".rb", "Ruby");
  m.set(".scala", "Scala");
  m.set(".scm", "Scheme");
  m.set(".ss", "Scheme");
  m.set(".st", "Smalltalk");
  m.set(".tex", "Latex");
  m.set(".xml", "XML");
  return m;
}

}  // namespace langid
