// Command-line front end: pipeline, perturb, analyze, fixtures, verify.
//
// Exit status: 0 success, 1 validation failure, 2 IO/config error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "implang/implang.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

void print_summary(const implang::AnalysisReport& report) {
  std::printf("pairs: %zu, expected direction: %zu\n", report.pairs.size(),
              report.expected_count);
  if (report.binomial) {
    std::printf("two-sided binomial p-value: %.4f\n",
                report.binomial->p_value);
  }
  for (const auto* t : {&report.min_perplexity, &report.auc}) {
    if (!*t) continue;
    std::printf("%s: across-language variance %.4f, within-language variance "
                "%.4f\n",
                (*t)->metric_name.c_str(), (*t)->across_variance,
                (*t)->within_variance);
  }
  print_warnings(report.warnings);
}

struct PipelineArgs {
  std::string config_path;
  std::uint64_t seed = 0;
  std::string languages;
  std::string variants;
  std::string out;
  std::string corpus_dir;
  std::string annotations_dir;
  bool verify = false;
};

struct PerturbArgs {
  std::string in;
  std::string out;
  std::string variant;
  std::uint64_t seed = 0;
  std::string manifest_in;
  std::string manifest_out;
  std::string annotations;
  std::string rev_marker{implang::kDefaultRevMarker};
  std::string hop_marker{implang::kDefaultHopMarker};
  std::string verb_tags = "VERB";
};

int run_pipeline(const PipelineArgs& args, const CLI::App& cmd) {
  implang::RunConfig config;
  if (!args.config_path.empty()) config = implang::load_config(args.config_path);
  if (cmd.count("--seed")) {
    config.global_seed = args.seed;
    config.split.seed = args.seed;
  }
  if (!args.languages.empty()) config.languages = split_list(args.languages);
  if (!args.variants.empty()) {
    config.variants.clear();
    for (const auto& v : split_list(args.variants)) {
      config.variants.push_back(implang::variant_from_name(v));
    }
  }
  if (!args.out.empty()) config.output_dir = args.out;
  if (!args.corpus_dir.empty()) config.corpus_dir = args.corpus_dir;
  if (!args.annotations_dir.empty()) {
    config.annotations_dir = args.annotations_dir;
  }
  const auto result = implang::run_pipeline(config, args.verify);
  print_warnings(result.warnings);
  std::printf("wrote %zu files to %s\n", result.file_hashes.size(),
              config.output_dir.c_str());
  if (args.verify) std::printf("verification passed\n");
  return kExitOk;
}

int run_perturb(const PerturbArgs& args) {
  using namespace implang;
  const auto kind = variant_from_name(args.variant);
  const auto corpus = parse_corpus(read_file(args.in));
  std::vector<PosAnnotation> annotations;
  if (!args.annotations.empty()) {
    annotations = parse_annotations(read_file(args.annotations), corpus);
  } else if (uses_hop_marker(kind)) {
    throw ConfigError("variant '" + args.variant + "' needs --annotations");
  }
  VerbTagSet verb_tags;
  for (const auto& t : split_list(args.verb_tags)) verb_tags.insert(t);

  MarkerManifest manifest;
  if (!args.manifest_in.empty()) {
    manifest =
        manifest_from_json(nlohmann::json::parse(read_file(args.manifest_in)));
  } else {
    manifest = build_manifest(corpus, annotations, args.seed, verb_tags);
  }
  if (!args.manifest_out.empty()) {
    write_file(args.manifest_out, to_json(manifest).dump(1) + "\n");
  }
  ApplyOptions options;
  options.annotations = annotations;
  options.manifest = &manifest;
  options.verb_tags = verb_tags;
  const auto out = apply_variant(
      corpus, make_variant(kind, args.rev_marker, args.hop_marker), options);
  if (args.out.empty() || args.out == "-") {
    write_corpus(std::cout, out);
  } else {
    write_file(args.out, to_text(out));
  }
  return kExitOk;
}

int run_verify(const std::string& dir) {
  const auto problems = implang::verify_dataset(dir);
  for (const auto& p : problems) std::cerr << "violation: " << p << '\n';
  if (!problems.empty()) {
    std::printf("verification failed: %zu violations\n", problems.size());
    return kExitValidation;
  }
  std::printf("verification passed\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Impossible-language corpus perturbation and learning-curve "
               "analysis"};
  app.require_subcommand(1);

  PipelineArgs pipeline_args;
  auto* pipeline = app.add_subcommand(
      "pipeline", "Build vocabularies, splits, manifests and variant corpora");
  pipeline->add_option("--config", pipeline_args.config_path,
                       "JSON run configuration");
  pipeline->add_option("--seed", pipeline_args.seed, "Global seed");
  pipeline->add_option("--languages", pipeline_args.languages,
                       "Comma-separated language names");
  pipeline->add_option("--variants", pipeline_args.variants,
                       "Comma-separated variant names");
  pipeline->add_option("--out", pipeline_args.out, "Output directory");
  pipeline->add_option("--corpus-dir", pipeline_args.corpus_dir,
                       "Directory holding <language>.txt");
  pipeline->add_option("--annotations-dir", pipeline_args.annotations_dir,
                       "Directory holding <language>.pos");
  pipeline->add_flag("--verify", pipeline_args.verify,
                     "Check parity invariants on the written tree");

  PerturbArgs perturb_args;
  auto* perturb =
      app.add_subcommand("perturb", "Apply a single variant to a corpus file");
  perturb->add_option("--in", perturb_args.in, "Input corpus")->required();
  perturb->add_option("--variant", perturb_args.variant, "Variant name")
      ->required();
  perturb->add_option("--out", perturb_args.out, "Output file (default stdout)");
  perturb->add_option("--seed", perturb_args.seed, "Global seed");
  perturb->add_option("--manifest", perturb_args.manifest_in,
                      "Read marker positions from this manifest");
  perturb->add_option("--write-manifest", perturb_args.manifest_out,
                      "Write the manifest used");
  perturb->add_option("--annotations", perturb_args.annotations,
                      "Parallel POS tag file");
  perturb->add_option("--rev-marker", perturb_args.rev_marker);
  perturb->add_option("--hop-marker", perturb_args.hop_marker);
  perturb->add_option("--verb-tags", perturb_args.verb_tags,
                      "Comma-separated verb tags");

  std::string analyze_manifest, analyze_out;
  auto* analyze =
      app.add_subcommand("analyze", "Analyze learning curves from a manifest");
  analyze->add_option("manifest", analyze_manifest, "Run manifest JSON")
      ->required();
  analyze->add_option("--out", analyze_out, "Report directory")->required();

  std::string fixtures_out;
  auto* fixtures = app.add_subcommand(
      "fixtures", "Analyze the embedded reference learning curves");
  fixtures->add_option("--out", fixtures_out, "Report directory")->required();

  std::string verify_dir;
  auto* verify =
      app.add_subcommand("verify", "Re-check a pipeline output tree");
  verify->add_option("--out,dir", verify_dir, "Pipeline output directory")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*pipeline) return run_pipeline(pipeline_args, *pipeline);
    if (*perturb) return run_perturb(perturb_args);
    if (*analyze) {
      print_summary(implang::run_analyze(analyze_manifest, analyze_out));
      return kExitOk;
    }
    if (*fixtures) {
      print_summary(implang::run_fixtures(fixtures_out));
      return kExitOk;
    }
    if (*verify) return run_verify(verify_dir);
  } catch (const implang::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const implang::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const implang::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const implang::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}
