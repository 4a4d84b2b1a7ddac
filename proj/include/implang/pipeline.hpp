#pragma once

// End-to-end dataset construction: raw tokenized corpus -> vocabulary ->
// unknown-word filter -> shuffled token-budget subset -> train/valid/test
// splits -> marker manifest -> every requested variant of every split.

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "implang/corpus.hpp"
#include "implang/error.hpp"
#include "implang/io.hpp"
#include "implang/perturb.hpp"

namespace implang {

struct RunConfig {
  std::vector<std::string> languages;
  std::vector<VariantKind> variants{kAllVariants.begin(), kAllVariants.end()};
  std::uint64_t global_seed = 0;
  std::size_t vocab_size = 50000;
  std::uint64_t token_budget = 90'000'000;
  double unknown_threshold = 0.05;
  SplitSpec split;
  std::string rev_marker{kDefaultRevMarker};
  std::string hop_marker{kDefaultHopMarker};
  std::vector<std::string> verb_tags{"VERB"};
  std::string corpus_dir;
  std::string annotations_dir;
  std::string output_dir;

  bool needs_annotations() const {
    return std::any_of(variants.begin(), variants.end(), uses_hop_marker);
  }

  void validate() const {
    if (languages.empty()) throw ConfigError("no languages configured");
    if (variants.empty()) throw ConfigError("no variants configured");
    if (vocab_size == 0) throw ConfigError("vocab_size must be >= 1");
    if (token_budget == 0) throw ConfigError("token_budget must be >= 1");
    if (!(unknown_threshold >= 0.0 && unknown_threshold <= 1.0)) {
      throw ConfigError("unknown_threshold must lie in [0, 1]");
    }
    split.validate();
    try {
      Token rev(rev_marker);
      Token hop(hop_marker);
      if (rev == hop) throw ConfigError("rev and hop markers must differ");
    } catch (const ValidationError& e) {
      throw ConfigError(std::string("invalid marker: ") + e.what());
    }
    for (const auto& lang : languages) {
      if (lang.empty() || lang.find_first_of("/\\. \t") != std::string::npos) {
        throw ConfigError("invalid language name '" + lang + "'");
      }
    }
  }
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j,
                                std::initializer_list<std::string_view> known,
                                std::string_view where) {
  if (!j.is_object()) {
    throw ConfigError(std::string(where) + " must be a JSON object");
  }
  for (const auto& item : j.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw ConfigError("unknown config key '" + std::string(where) +
                        (where.empty() ? "" : ".") + item.key() + "'");
    }
  }
}

template <typename T>
void read_key(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace detail

inline nlohmann::json to_json(const RunConfig& c) {
  std::vector<std::string> variants;
  for (auto v : c.variants) variants.emplace_back(variant_name(v));
  return {
      {"languages", c.languages},
      {"variants", variants},
      {"global_seed", c.global_seed},
      {"vocab_size", c.vocab_size},
      {"token_budget", c.token_budget},
      {"unknown_threshold", c.unknown_threshold},
      {"split",
       {{"train", c.split.train_fraction},
        {"valid", c.split.valid_fraction},
        {"test", c.split.test_fraction}}},
      {"markers", {{"rev", c.rev_marker}, {"hop", c.hop_marker}}},
      {"verb_tags", c.verb_tags},
      {"paths",
       {{"corpus_dir", c.corpus_dir},
        {"annotations_dir", c.annotations_dir},
        {"output_dir", c.output_dir}}},
  };
}

// Missing keys keep their defaults; unknown keys at any level are errors.
inline RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    detail::reject_unknown_keys(
        j,
        {"languages", "variants", "global_seed", "vocab_size", "token_budget",
         "unknown_threshold", "split", "markers", "verb_tags", "paths"},
        "");
    detail::read_key(j, "languages", c.languages);
    if (j.contains("variants")) {
      c.variants.clear();
      for (const auto& name : j.at("variants").get<std::vector<std::string>>()) {
        c.variants.push_back(variant_from_name(name));
      }
    }
    detail::read_key(j, "global_seed", c.global_seed);
    detail::read_key(j, "vocab_size", c.vocab_size);
    detail::read_key(j, "token_budget", c.token_budget);
    detail::read_key(j, "unknown_threshold", c.unknown_threshold);
    if (j.contains("split")) {
      const auto& s = j.at("split");
      detail::reject_unknown_keys(s, {"train", "valid", "test"}, "split");
      detail::read_key(s, "train", c.split.train_fraction);
      detail::read_key(s, "valid", c.split.valid_fraction);
      detail::read_key(s, "test", c.split.test_fraction);
    }
    if (j.contains("markers")) {
      const auto& m = j.at("markers");
      detail::reject_unknown_keys(m, {"rev", "hop"}, "markers");
      detail::read_key(m, "rev", c.rev_marker);
      detail::read_key(m, "hop", c.hop_marker);
    }
    detail::read_key(j, "verb_tags", c.verb_tags);
    if (j.contains("paths")) {
      const auto& p = j.at("paths");
      detail::reject_unknown_keys(
          p, {"corpus_dir", "annotations_dir", "output_dir"}, "paths");
      detail::read_key(p, "corpus_dir", c.corpus_dir);
      detail::read_key(p, "annotations_dir", c.annotations_dir);
      detail::read_key(p, "output_dir", c.output_dir);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  c.split.seed = c.global_seed;
  return c;
}

inline RunConfig load_config(const fs::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("cannot parse config '" + path.string() + "': " +
                      e.what());
  }
  // Relative paths in a config file are relative to that file.
  auto config = config_from_json(j);
  const auto base = path.parent_path();
  for (auto* dir :
       {&config.corpus_dir, &config.annotations_dir, &config.output_dir}) {
    if (!dir->empty() && fs::path(*dir).is_relative()) {
      *dir = (base / *dir).lexically_normal().string();
    }
  }
  return config;
}

inline std::string variant_file_name(const std::string& language,
                                     VariantKind kind,
                                     std::string_view split_name) {
  return language + "." + std::string(variant_name(kind)) + "." +
         std::string(split_name) + ".txt";
}

inline std::string manifest_file_name(const std::string& language,
                                      std::string_view split_name) {
  return language + "." + std::string(split_name) + ".manifest.json";
}

inline std::string annotation_file_name(const std::string& language,
                                        std::string_view split_name) {
  return language + "." + std::string(split_name) + ".pos";
}

inline constexpr std::string_view kProvenanceFile = "provenance.json";

struct LanguageOutput {
  std::string language;
  // Relative path (from the output root) -> file content.
  std::map<std::string, std::string> files;
  std::vector<std::string> warnings;
};

// Builds every output file of one language in memory. Pure: depends only on
// the config and the input files.
inline LanguageOutput build_language(const RunConfig& config,
                                     const std::string& language) {
  LanguageOutput result;
  result.language = language;
  const fs::path corpus_path = fs::path(config.corpus_dir) / (language + ".txt");
  if (!fs::exists(corpus_path)) {
    throw IoError("missing corpus file '" + corpus_path.string() + "'");
  }
  const std::string corpus_text = read_file(corpus_path);
  Corpus corpus;
  try {
    corpus = parse_corpus(corpus_text);
  } catch (const ParseError& e) {
    throw ValidationError(corpus_path.string() + ": " + e.what());
  }

  std::vector<PosAnnotation> annotations;
  if (config.needs_annotations()) {
    if (config.annotations_dir.empty()) {
      throw ConfigError("hop variants requested but no annotations_dir set");
    }
    const fs::path ann_path =
        fs::path(config.annotations_dir) / (language + ".pos");
    if (!fs::exists(ann_path)) {
      throw ConfigError("hop variants requested but '" + ann_path.string() +
                        "' does not exist");
    }
    try {
      annotations = parse_annotations(read_file(ann_path), corpus);
    } catch (const ParseError& e) {
      throw ValidationError(ann_path.string() + ": " + e.what());
    }
  }

  const Token rev_marker(config.rev_marker);
  const Token hop_marker(config.hop_marker);
  const auto vocab = build_vocabulary(corpus, config.vocab_size);
  for (const auto* marker : {&rev_marker, &hop_marker}) {
    if (vocab.contains(marker->text())) {
      throw ValidationError("marker '" + marker->text() +
                            "' is in the vocabulary of " + language);
    }
    check_marker_absent(corpus, *marker);
  }

  const std::string dir = language + "/";
  {
    std::ostringstream v;
    write_vocabulary(v, vocab);
    result.files[dir + language + ".vocab.tsv"] = v.str();
  }

  const auto kept = known_positions(corpus, vocab, config.unknown_threshold);
  const Corpus filtered = select(corpus, kept);
  const auto plan = plan_subset(filtered, config.token_budget, config.global_seed);
  if (plan.warning) result.warnings.push_back(language + ": " + *plan.warning);
  const Corpus subset = select(filtered, plan.positions);

  std::vector<PosAnnotation> subset_ann;
  if (!annotations.empty()) {
    const auto filtered_ann =
        select(std::span<const PosAnnotation>(annotations), kept);
    subset_ann = select(std::span<const PosAnnotation>(filtered_ann),
                        plan.positions);
  }

  const auto sizes = split_sizes(subset.size(), config.split);
  const VerbTagSet verb_tags(config.verb_tags.begin(), config.verb_tags.end());
  std::size_t from = 0;
  for (std::size_t part = 0; part < kSplitNames.size(); ++part) {
    const std::size_t count =
        part == 0 ? sizes.train : (part == 1 ? sizes.valid : sizes.test);
    std::vector<std::size_t> positions(count);
    for (std::size_t i = 0; i < count; ++i) positions[i] = from + i;
    from += count;
    const auto split_name = kSplitNames[part];
    const Corpus split_corpus = select(subset, positions);
    std::vector<PosAnnotation> split_ann;
    if (!subset_ann.empty()) {
      split_ann = select(std::span<const PosAnnotation>(subset_ann),
                         std::span<const std::size_t>(positions));
      std::ostringstream a;
      write_annotations(a, split_ann);
      result.files[dir + annotation_file_name(language, split_name)] = a.str();
    }

    const auto manifest =
        build_manifest(split_corpus, split_ann, config.global_seed, verb_tags);
    result.files[dir + manifest_file_name(language, split_name)] =
        to_json(manifest).dump(1) + "\n";

    ApplyOptions options;
    options.annotations = split_ann;
    options.manifest = &manifest;
    options.verb_tags = verb_tags;
    // The unperturbed split is always written: it is the reference that
    // verification compares every other variant against.
    std::vector<VariantKind> kinds = config.variants;
    if (std::find(kinds.begin(), kinds.end(), VariantKind::kNoPerturb) ==
        kinds.end()) {
      kinds.insert(kinds.begin(), VariantKind::kNoPerturb);
    }
    for (auto kind : kinds) {
      const auto variant =
          make_variant(kind, config.rev_marker, config.hop_marker);
      result.files[dir + variant_file_name(language, kind, split_name)] =
          to_text(apply_variant(split_corpus, variant, options));
    }
  }
  return result;
}

struct PipelineResult {
  std::map<std::string, std::string> file_hashes;  // relative path -> sha256
  std::vector<std::string> warnings;
};

inline std::vector<std::string> verify_dataset(const fs::path& root);

// Runs every language (concurrently, one task each), writes the output tree
// and a provenance record with the effective config and content hashes.
inline PipelineResult run_pipeline(const RunConfig& config,
                                   bool verify = false) {
  config.validate();
  if (config.output_dir.empty()) throw ConfigError("no output_dir set");

  std::vector<std::future<LanguageOutput>> tasks;
  tasks.reserve(config.languages.size());
  for (const auto& lang : config.languages) {
    tasks.push_back(std::async(std::launch::async, build_language,
                               std::cref(config), lang));
  }
  std::vector<LanguageOutput> outputs;
  std::exception_ptr first_error;
  for (auto& t : tasks) {
    try {
      outputs.push_back(t.get());
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  const fs::path root(config.output_dir);
  PipelineResult result;
  for (const auto& out : outputs) {
    for (const auto& [rel, content] : out.files) {
      write_file(root / rel, content);
      result.file_hashes[rel] = sha256_hex(content);
    }
    result.warnings.insert(result.warnings.end(), out.warnings.begin(),
                           out.warnings.end());
  }
  // The tree's own location is not part of its content; recording it would
  // make identical runs into different directories differ.
  RunConfig echoed = config;
  echoed.output_dir = ".";
  nlohmann::json provenance = {
      {"config", to_json(echoed)},
      {"files", result.file_hashes},
      {"warnings", result.warnings},
  };
  write_file(root / kProvenanceFile, provenance.dump(2) + "\n");

  if (verify) {
    const auto problems = verify_dataset(root);
    if (!problems.empty()) {
      std::string msg = "verification failed:";
      for (const auto& p : problems) msg += "\n  " + p;
      throw ValidationError(msg);
    }
  }
  return result;
}

// Re-checks a pipeline output tree: content hashes against the provenance
// record, then every parity invariant between each split's variants, the
// manifest's rev positions, and hop marker counts against the verb tags.
inline std::vector<std::string> verify_dataset(const fs::path& root) {
  std::vector<std::string> problems;
  const fs::path prov_path = root / kProvenanceFile;
  if (!fs::exists(prov_path)) {
    throw IoError("no provenance record at '" + prov_path.string() + "'");
  }
  nlohmann::json provenance;
  try {
    provenance = nlohmann::json::parse(read_file(prov_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed provenance: ") + e.what());
  }
  const RunConfig config = config_from_json(provenance.at("config"));

  for (const auto& [rel, hash] : provenance.at("files").items()) {
    const fs::path p = root / rel;
    if (!fs::exists(p)) {
      problems.push_back(rel + ": missing");
    } else if (sha256_hex(read_file(p)) != hash.get<std::string>()) {
      problems.push_back(rel + ": content hash mismatch");
    }
  }

  const Token rev_marker(config.rev_marker);
  const Token hop_marker(config.hop_marker);
  const VerbTagSet verb_tags(config.verb_tags.begin(), config.verb_tags.end());
  for (const auto& lang : config.languages) {
    const fs::path dir = root / lang;
    for (auto split_name : kSplitNames) {
      const auto original = parse_corpus(read_file(
          dir / variant_file_name(lang, VariantKind::kNoPerturb, split_name)));
      VariantOutputs outputs;
      for (auto kind : config.variants) {
        const auto path = dir / variant_file_name(lang, kind, split_name);
        if (!fs::exists(path)) {
          problems.push_back(path.string() + ": missing");
          continue;
        }
        outputs.corpora.emplace(kind, parse_corpus(read_file(path)));
      }
      for (auto& p : check_parity(original, outputs, rev_marker, hop_marker)) {
        problems.push_back(lang + "/" + std::string(split_name) + ": " + p);
      }

      const auto manifest = manifest_from_json(nlohmann::json::parse(
          read_file(dir / manifest_file_name(lang, split_name))));
      if (manifest.global_seed != config.global_seed) {
        problems.push_back(lang + "/" + std::string(split_name) +
                           ": manifest seed differs from config");
      }
      if (auto it = outputs.corpora.find(VariantKind::kReverseBaseline);
          it != outputs.corpora.end()) {
        for (const auto& s : it->second) {
          const auto& t = s.tokens();
          const auto at = static_cast<std::size_t>(
              std::find(t.begin(), t.end(), rev_marker) - t.begin());
          if (!manifest.entries.count(s.index()) ||
              manifest.at(s.index()).rev_position != at) {
            problems.push_back(lang + "/" + std::string(split_name) +
                               ": reverse_baseline sentence " +
                               std::to_string(s.index()) +
                               " marker not at manifest position");
          }
        }
      }
      const auto ann_path = dir / annotation_file_name(lang, split_name);
      if (fs::exists(ann_path)) {
        const auto ann = parse_annotations(read_file(ann_path), original);
        for (auto kind : {VariantKind::kHopBaseline, VariantKind::kHop}) {
          auto it = outputs.corpora.find(kind);
          if (it == outputs.corpora.end()) continue;
          for (std::size_t i = 0; i < original.size(); ++i) {
            const auto verbs = verb_indices(ann[i], verb_tags);
            if (it->second[i].size() != original[i].size() + verbs.size()) {
              problems.push_back(lang + "/" + std::string(split_name) + ": " +
                                 std::string(variant_name(kind)) +
                                 " sentence " + std::to_string(i) +
                                 " marker count != verb count");
            }
          }
        }
      }
    }
  }
  return problems;
}

}  // namespace implang
