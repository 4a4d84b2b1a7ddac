#pragma once

// Report assembly: loads a set of learning curves, computes the pairwise
// mean errors, direction counts, binomial test and variance reports, and
// writes them out as JSON, TSV and SVG.

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "implang/curves.hpp"
#include "implang/error.hpp"
#include "implang/fixtures.hpp"
#include "implang/io.hpp"
#include "implang/stats.hpp"
#include "implang/svg.hpp"

namespace implang {

// Below this many pairs the binomial test is skipped.
inline constexpr std::size_t kMinBinomialPairs = 10;

struct BinomialSummary {
  std::size_t k;
  std::size_t n;
  double p;
  double p_value;
};

struct AnalysisReport {
  std::vector<PairResult> pairs;
  std::size_t expected_count = 0;
  std::optional<BinomialSummary> binomial;
  std::optional<TypologyReport> min_perplexity;
  std::optional<TypologyReport> auc;
  std::vector<std::string> warnings;
};

inline AnalysisReport analyze(const CurveSet& curves,
                              std::vector<std::string> warnings = {}) {
  AnalysisReport report;
  report.warnings = std::move(warnings);
  report.pairs = pair_all(curves);
  report.expected_count = count_expected(report.pairs);
  if (report.pairs.size() >= kMinBinomialPairs) {
    report.binomial = BinomialSummary{
        report.expected_count, report.pairs.size(), 0.5,
        binomial_two_sided(static_cast<std::int64_t>(report.expected_count),
                           static_cast<std::int64_t>(report.pairs.size()),
                           0.5)};
  } else {
    report.warnings.push_back(
        "binomial test skipped: " + std::to_string(report.pairs.size()) +
        " pairs, fewer than " + std::to_string(kMinBinomialPairs));
  }
  if (curves.languages().size() >= 2) {
    report.min_perplexity = variance_report(
        metric_matrix(curves, Metric::kMinPerplexity), "min_perplexity");
    report.auc = variance_report(metric_matrix(curves, Metric::kAuc), "auc");
  } else {
    report.warnings.push_back(
        "variance reports skipped: fewer than 2 languages");
  }
  for (const auto& p : report.pairs) {
    if (p.fragile) {
      report.warnings.push_back(
          "fragile direction: " + p.language + " " +
          std::string(variant_name(p.perturbation)) + " |ME| < " +
          svg::detail::fmt("%.1f", kFragileMeanError));
    }
  }
  return report;
}

// Run manifest: {"<language>": {"<variant>": "<csv path>"}}. Relative paths
// resolve against the manifest's directory.
inline CurveSet load_curves(const fs::path& manifest_path,
                            std::vector<std::string>* warnings = nullptr) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("cannot parse run manifest '" + manifest_path.string() +
                      "': " + e.what());
  }
  if (!manifest.is_object()) {
    throw ConfigError("run manifest must be a JSON object");
  }
  const fs::path base = manifest_path.parent_path();
  CurveSet curves;
  for (const auto& [language, variants] : manifest.items()) {
    if (!variants.is_object()) {
      throw ConfigError("run manifest entry '" + language +
                        "' must map variants to paths");
    }
    for (const auto& [variant, path_json] : variants.items()) {
      const auto kind = variant_from_name(variant);
      if (!path_json.is_string()) {
        throw ConfigError("curve path for (" + language + ", " + variant +
                          ") must be a string");
      }
      fs::path path = path_json.get<std::string>();
      if (path.is_relative()) path = base / path;
      std::vector<std::string> local;
      try {
        curves.add(parse_curve(read_file(path), language, kind, &local));
      } catch (const ParseError& e) {
        throw ValidationError(path.string() + ": " + e.what());
      }
      if (warnings) {
        for (auto& w : local) warnings->push_back(path.string() + ": " + w);
      }
    }
  }
  return curves;
}

namespace detail {

inline std::string fixed4(double v) { return svg::detail::fmt("%.4f", v); }

inline nlohmann::json typology_json(const TypologyReport& r) {
  std::vector<std::string> variants;
  for (auto v : r.variants) variants.emplace_back(variant_name(v));
  return {{"metric", r.metric_name},
          {"languages", r.languages},
          {"variants", variants},
          {"values", r.values},
          {"across_variance", r.across_variance},
          {"within_variance", r.within_variance}};
}

inline std::string typology_tsv(const TypologyReport& r) {
  std::string out = "language";
  for (auto v : r.variants) out += "\t" + std::string(variant_name(v));
  out += "\n";
  for (std::size_t l = 0; l < r.languages.size(); ++l) {
    out += r.languages[l];
    for (double v : r.values[l]) out += "\t" + fixed4(v);
    out += "\n";
  }
  out += "# across_variance\t" + fixed4(r.across_variance) + "\n";
  out += "# within_variance\t" + fixed4(r.within_variance) + "\n";
  return out;
}

}  // namespace detail

inline nlohmann::json to_json(const AnalysisReport& report) {
  nlohmann::json pairs = nlohmann::json::array();
  std::map<std::string, std::size_t> by_perturbation;
  for (const auto& p : report.pairs) {
    pairs.push_back({{"language", p.language},
                     {"perturbation", std::string(variant_name(p.perturbation))},
                     {"baseline", std::string(variant_name(p.baseline))},
                     {"mean_error", p.mean_error},
                     {"expected_direction", p.expected_direction},
                     {"fragile", p.fragile}});
    auto& slot = by_perturbation[std::string(variant_name(p.perturbation))];
    if (p.expected_direction) ++slot;
  }
  nlohmann::json j = {
      {"pairs", pairs},
      {"direction_count",
       {{"expected", report.expected_count},
        {"total", report.pairs.size()},
        {"by_perturbation", by_perturbation}}},
      {"binomial", nullptr},
      {"typology", nlohmann::json::object()},
      {"warnings", report.warnings},
  };
  if (report.binomial) {
    j["binomial"] = {{"k", report.binomial->k},
                     {"n", report.binomial->n},
                     {"p", report.binomial->p},
                     {"p_value", report.binomial->p_value}};
  }
  if (report.min_perplexity) {
    j["typology"]["min_perplexity"] =
        detail::typology_json(*report.min_perplexity);
  }
  if (report.auc) j["typology"]["auc"] = detail::typology_json(*report.auc);
  return j;
}

inline std::string pairs_tsv(const AnalysisReport& report) {
  std::string out =
      "language\tperturbation\tbaseline\tmean_error\texpected_direction\t"
      "fragile\n";
  for (const auto& p : report.pairs) {
    out += p.language + "\t" + std::string(variant_name(p.perturbation)) +
           "\t" + std::string(variant_name(p.baseline)) + "\t" +
           detail::fixed4(p.mean_error) + "\t" +
           (p.expected_direction ? "yes" : "no") + "\t" +
           (p.fragile ? "yes" : "no") + "\n";
  }
  out += "# expected_direction\t" + std::to_string(report.expected_count) +
         "/" + std::to_string(report.pairs.size()) + "\n";
  if (report.binomial) {
    out += "# binomial_p_value\t" + detail::fixed4(report.binomial->p_value) +
           "\n";
  }
  return out;
}

// Writes report.json, pairs.tsv, <metric>.tsv, <language>_curves.svg and
// <metric>_scatter.svg under `out_dir`.
inline void write_reports(const AnalysisReport& report, const CurveSet& curves,
                          const fs::path& out_dir) {
  write_file(out_dir / "report.json", to_json(report).dump(2) + "\n");
  write_file(out_dir / "pairs.tsv", pairs_tsv(report));
  for (const auto* t : {&report.min_perplexity, &report.auc}) {
    if (!*t) continue;
    write_file(out_dir / ((*t)->metric_name + ".tsv"),
               detail::typology_tsv(**t));
    svg::emit_scatter(**t, out_dir / ((*t)->metric_name + "_scatter.svg"));
  }
  for (const auto& lang : curves.languages()) {
    svg::emit_curve_chart(svg::language_chart(curves, lang, report.pairs),
                          out_dir / (lang + "_curves.svg"));
  }
}

inline AnalysisReport run_analyze(const fs::path& manifest_path,
                                  const fs::path& out_dir) {
  std::vector<std::string> warnings;
  const auto curves = load_curves(manifest_path, &warnings);
  auto report = analyze(curves, std::move(warnings));
  write_reports(report, curves, out_dir);
  return report;
}

// Materializes the embedded reference curves as CSV files plus a run manifest
// under <out_dir>/curves, then analyzes them like any other run.
inline AnalysisReport run_fixtures(const fs::path& out_dir) {
  const fs::path curve_dir = out_dir / "curves";
  nlohmann::json manifest = nlohmann::json::object();
  for (std::size_t l = 0; l < fixtures::kNumLanguages; ++l) {
    const std::string lang(fixtures::kLanguages[l]);
    for (std::size_t v = 0; v < fixtures::kNumVariants; ++v) {
      const auto c = fixtures::curve(l, v);
      const std::string name =
          lang + "." + std::string(fixtures::kFixtureVariants[v]) + ".csv";
      std::ostringstream csv;
      write_curve(csv, c);
      write_file(curve_dir / name, csv.str());
      manifest[lang][std::string(fixtures::kFixtureVariants[v])] = name;
    }
  }
  const auto manifest_path = curve_dir / "manifest.json";
  write_file(manifest_path, manifest.dump(2) + "\n");
  return run_analyze(manifest_path, out_dir);
}

}  // namespace implang
