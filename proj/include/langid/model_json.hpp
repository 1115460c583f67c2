#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "langid/profile.hpp"

namespace langid {

/// Canonical model document: sorted keys, rank-ordered arrays, shortest
/// round-trip number formatting. Saving the same model twice yields
/// byte-identical files.
inline nlohmann::json model_to_json(const Model& model) {
  nlohmann::json doc;
  doc["format_version"] = model.format_version;
  doc["feature_depths"] = model.feature_depths;
  nlohmann::json langs = nlohmann::json::array();
  for (const LanguageProfile& p : model.languages) {
    nlohmann::json lang;
    lang["name"] = p.name;
    lang["file_count"] = p.file_count;
    auto pairs = [](const std::vector<std::pair<std::string, double>>& items) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [item, frac] : items) arr.push_back({item, frac});
      return arr;
    };
    lang["first_words"] = pairs(p.first_words);
    lang["keywords"] = pairs(p.keywords);
    lang["last_chars"] = pairs(p.last_chars);
    lang["operators"] = pairs(p.operators);
    lang["bracket_dist"] = p.bracket_dist;
    lang["punct"] = {p.punct_b, p.punct_y};
    nlohmann::json tokens;
    tokens["string"] = p.string_tokens;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& [open, close] : p.block_pairs) blocks.push_back({open, close});
    tokens["block"] = blocks;
    tokens["line"] = p.line_tokens;
    lang["tokens"] = tokens;
    langs.push_back(std::move(lang));
  }
  doc["languages"] = std::move(langs);
  return doc;
}

inline std::string model_to_string(const Model& model) {
  return model_to_json(model).dump(2) + "\n";
}

inline Model model_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::runtime_error("model document is not an object");
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer())
    throw std::runtime_error("model document has no format_version");
  int version = doc["format_version"].get<int>();
  if (version != kModelFormatVersion)
    throw std::runtime_error("unsupported model format version " + std::to_string(version) +
                             " (expected " + std::to_string(kModelFormatVersion) + ")");
  Model model;
  model.format_version = version;
  for (const auto& [feature, depth] : doc.at("feature_depths").items()) {
    int d = depth.get<int>();
    if (d < 1) throw std::runtime_error("feature depth must be >= 1: " + feature);
    model.feature_depths[feature] = d;
  }
  auto pairs = [](const nlohmann::json& arr) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& entry : arr)
      out.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<double>());
    return out;
  };
  for (const auto& lang : doc.at("languages")) {
    LanguageProfile p;
    p.name = lang.at("name").get<std::string>();
    p.file_count = lang.at("file_count").get<std::uint64_t>();
    p.first_words = pairs(lang.at("first_words"));
    p.keywords = pairs(lang.at("keywords"));
    p.last_chars = pairs(lang.at("last_chars"));
    p.operators = pairs(lang.at("operators"));
    const auto& brackets = lang.at("bracket_dist");
    if (brackets.size() != 4) throw std::runtime_error("bracket_dist must have 4 entries");
    for (std::size_t i = 0; i < 4; ++i) p.bracket_dist[i] = brackets.at(i).get<double>();
    const auto& punct = lang.at("punct");
    if (punct.size() != 2) throw std::runtime_error("punct must have 2 entries");
    p.punct_b = punct.at(0).get<double>();
    p.punct_y = punct.at(1).get<double>();
    const auto& tokens = lang.at("tokens");
    for (const auto& t : tokens.at("string")) p.string_tokens.insert(t.get<std::string>());
    for (const auto& b : tokens.at("block"))
      p.block_pairs.insert({b.at(0).get<std::string>(), b.at(1).get<std::string>()});
    for (const auto& t : tokens.at("line")) p.line_tokens.insert(t.get<std::string>());
    if (model.find(p.name)) throw std::runtime_error("duplicate language in model: " + p.name);
    model.languages.push_back(std::move(p));
  }
  return model;
}

inline Model model_from_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed model file: ") + e.what());
  }
  try {
    return model_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed model document: ") + e.what());
  }
}

inline void save_model(const Model& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out << model_to_string(model);
  if (!out) throw std::runtime_error("error writing model file: " + path);
}

inline Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return model_from_string(text);
}

}  // namespace langid
