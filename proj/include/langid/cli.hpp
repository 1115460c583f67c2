#pragma once

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "langid/corpus.hpp"
#include "langid/evaluate.hpp"
#include "langid/model_json.hpp"
#include "langid/report.hpp"
#include "langid/scorer.hpp"

namespace langid {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitError = 2;

struct TrainCli {
  std::string corpus_dir;
  std::string out_path;
  std::vector<std::string> depths;  // feature=n
  std::string ext_map_path;
  double token_keep = 0.10;
};

struct IdentifyCli {
  std::optional<std::string> input_path;  // stdin when absent
  std::string model_path;
  int top_k = 5;
  bool json = false;
};

struct EvalCli {
  std::string corpus_dir;
  std::string model_path;
  int top_k = 5;
  bool json = false;
  std::string ext_map_path;
};

namespace detail {

inline ExtensionMap load_extension_map(const std::string& override_path) {
  ExtensionMap map = default_extension_map();
  if (!override_path.empty()) map.merge_config_file(override_path);
  return map;
}

inline std::string read_input(const std::optional<std::string>& path, std::istream& in) {
  if (path) return read_file_capped(*path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.size() > kMaxSampleBytes) data.resize(kMaxSampleBytes);
  return data;
}

inline SourceSample sample_from_input(const std::optional<std::string>& path,
                                      std::istream& in) {
  std::string data = read_input(path, in);
  if (!is_valid_utf8(data))
    throw std::runtime_error("input is not valid UTF-8: " + path.value_or("stdin"));
  return SourceSample::from_text(path.value_or("stdin"), std::nullopt, std::move(data));
}

}  // namespace detail

inline int run_train(const TrainCli& cli, std::ostream& out, std::ostream& err) {
  TrainOptions options;
  for (const std::string& spec : cli.depths) {
    std::size_t eq = spec.find('=');
    if (eq == std::string::npos) {
      err << "error: --depth expects feature=n, got '" << spec << "'\n";
      return kExitUsage;
    }
    std::string feature = spec.substr(0, eq);
    if (!options.feature_depths.count(feature)) {
      err << "error: unknown feature '" << feature << "' (expected one of";
      for (const auto& [name, depth] : options.feature_depths) err << " " << name;
      err << ")\n";
      return kExitUsage;
    }
    int depth = 0;
    try {
      depth = std::stoi(spec.substr(eq + 1));
    } catch (...) {
      depth = 0;
    }
    if (depth < 1) {
      err << "error: depth must be a positive integer in '" << spec << "'\n";
      return kExitUsage;
    }
    options.feature_depths[feature] = depth;
  }
  if (cli.token_keep < 0.0 || cli.token_keep > 1.0) {
    err << "error: --token-keep must lie in [0,1]\n";
    return kExitUsage;
  }
  options.token_keep_fraction = cli.token_keep;

  try {
    ExtensionMap map = detail::load_extension_map(cli.ext_map_path);
    TokenDatabase db = default_token_database();
    TrainingAccumulator acc(db, options);
    std::map<std::string, std::uint64_t> label_counts;
    WalkStats stats = walk_corpus(cli.corpus_dir, map, [&](SourceSample&& sample) {
      ++label_counts[*sample.label];
      acc.add(sample);
    });
    if (label_counts.empty()) throw std::runtime_error("no samples found in corpus: " + cli.corpus_dir);
    for (const std::string& declared : stats.declared_languages) {
      bool found = false;
      for (const auto& [label, n] : label_counts)
        if (equals_fold(label, declared)) found = true;
      if (!found)
        throw std::runtime_error("no training samples for declared language: " + declared);
    }
    Model model = acc.finish();
    save_model(model, cli.out_path);
    out << "trained " << model.languages.size() << " languages from " << stats.yielded
        << " files\n";
    std::size_t width = 0;
    for (const auto& [label, n] : label_counts) width = std::max(width, label.size());
    for (const auto& [label, n] : label_counts) {
      out << "  " << label;
      out << std::string(width - label.size(), ' ') << "  " << n << " files\n";
    }
    if (stats.skipped() > 0) {
      out << "skipped " << stats.skipped() << " files (extension " << stats.skipped_extension
          << ", label mismatch " << stats.skipped_label_mismatch << ", undecodable "
          << stats.skipped_undecodable << ", empty " << stats.skipped_empty << ")\n";
    }
    out << "model written to " << cli.out_path << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

inline int run_identify(const IdentifyCli& cli, std::istream& in, std::ostream& out,
                        std::ostream& err) {
  if (cli.top_k < 1) {
    err << "error: --top must be >= 1\n";
    return kExitUsage;
  }
  try {
    Model model = load_model(cli.model_path);
    TokenDatabase db = default_token_database();
    SourceSample sample = detail::sample_from_input(cli.input_path, in);
    ScoreReport report = identify(sample, model, db);
    if (report.degenerate_input)
      err << "warning: empty or whitespace-only input; scores are uniform\n";
    if (cli.json) {
      out << report_to_json(report, cli.top_k).dump(2) << "\n";
    } else {
      out << report_to_table(report, cli.top_k);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

inline int run_eval(const EvalCli& cli, std::ostream& out, std::ostream& err) {
  if (cli.top_k < 1) {
    err << "error: --top must be >= 1\n";
    return kExitUsage;
  }
  try {
    Model model = load_model(cli.model_path);
    TokenDatabase db = default_token_database();
    ExtensionMap map = detail::load_extension_map(cli.ext_map_path);
    EvalResult result = evaluate_corpus(cli.corpus_dir, model, db, map);
    if (cli.json) {
      out << eval_to_json(result).dump(2) << "\n";
    } else {
      out << eval_to_text(result);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

inline int run_detect_tokens(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    SourceSample sample = detail::sample_from_input(path, std::cin);
    TokenFindings findings = detect_all(sample, default_token_database());
    out << findings_to_tsv(findings);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

inline int run_features(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    SourceSample sample = detail::sample_from_input(path, std::cin);
    FeatureObservation obs = extract_all(sample, default_token_database());
    out << observation_to_json(obs).dump(2) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace langid
