#pragma once

// Exact two-sided binomial test and the across/within-language variance
// decomposition of a language x variant metric matrix.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "implang/curves.hpp"
#include "implang/error.hpp"

namespace implang {

// log P(X = k) for X ~ Binomial(n, p), evaluated through lgamma so that
// large n never overflows.
inline double binomial_log_pmf(std::int64_t k, std::int64_t n, double p) {
  if (p == 0.0) {
    return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  if (p == 1.0) {
    return k == n ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) -
         std::lgamma(nd - kd + 1.0) + kd * std::log(p) +
         (nd - kd) * std::log1p(-p);
}

// Two-sided exact binomial p-value by the method of small p-values: the sum
// of P(X = i) over every outcome i no more likely than the observed k. The
// 1 + 1e-7 factor absorbs floating-point noise between tied outcomes.
inline double binomial_two_sided(std::int64_t k, std::int64_t n,
                                 double p = 0.5) {
  if (n < 0 || k < 0 || k > n) {
    throw ValidationError("binomial test needs 0 <= k <= n (k=" +
                          std::to_string(k) + ", n=" + std::to_string(n) +
                          ")");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("binomial test needs p in [0, 1]");
  }
  constexpr double kRelTolerance = 1.0 + 1e-7;
  const double observed = binomial_log_pmf(k, n, p);
  const double cutoff = observed + std::log(kRelTolerance);
  double total = 0.0;
  for (std::int64_t i = 0; i <= n; ++i) {
    const double lp = binomial_log_pmf(i, n, p);
    if (lp <= cutoff) total += std::exp(lp);
  }
  return std::clamp(total, 0.0, 1.0);
}

// Unbiased (n - 1 denominator) variance.
inline double sample_variance(std::span<const double> values) {
  if (values.size() < 2) {
    throw ValidationError("sample variance needs at least two values");
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

/// Metric values over languages (rows) x variants (columns); cells may be
/// missing until the matrix is complete.
struct MetricMatrix {
  std::vector<std::string> languages;
  std::vector<VariantKind> variants;
  std::vector<std::optional<double>> cells;  // row-major

  MetricMatrix(std::vector<std::string> langs, std::vector<VariantKind> vars)
      : languages(std::move(langs)),
        variants(std::move(vars)),
        cells(languages.size() * variants.size()) {}

  std::optional<double>& at(std::size_t lang, std::size_t variant) {
    return cells[lang * variants.size() + variant];
  }
  const std::optional<double>& at(std::size_t lang,
                                  std::size_t variant) const {
    return cells[lang * variants.size() + variant];
  }
};

struct TypologyReport {
  std::string metric_name;
  std::vector<std::string> languages;
  std::vector<VariantKind> variants;
  std::vector<std::vector<double>> values;  // [language][variant]
  double across_variance = 0.0;
  double within_variance = 0.0;
};

// across = mean over variants of the variance across languages;
// within = mean over languages of the variance across that language's
// variants. Both on raw metric values.
inline TypologyReport variance_report(const MetricMatrix& matrix,
                                      std::string metric_name) {
  const auto n_lang = matrix.languages.size();
  const auto n_var = matrix.variants.size();
  if (n_lang < 2 || n_var < 2) {
    throw ValidationError(
        "variance report needs at least 2 languages and 2 variants");
  }
  std::string missing;
  for (std::size_t l = 0; l < n_lang; ++l) {
    for (std::size_t v = 0; v < n_var; ++v) {
      if (!matrix.at(l, v)) {
        if (!missing.empty()) missing += ", ";
        missing += "(" + matrix.languages[l] + ", " +
                   std::string(variant_name(matrix.variants[v])) + ")";
      }
    }
  }
  if (!missing.empty()) {
    throw ValidationError("incomplete metric matrix; missing " + missing);
  }

  TypologyReport report;
  report.metric_name = std::move(metric_name);
  report.languages = matrix.languages;
  report.variants = matrix.variants;
  report.values.assign(n_lang, std::vector<double>(n_var));
  for (std::size_t l = 0; l < n_lang; ++l) {
    for (std::size_t v = 0; v < n_var; ++v) {
      report.values[l][v] = *matrix.at(l, v);
    }
  }

  double across = 0.0;
  std::vector<double> column(n_lang);
  for (std::size_t v = 0; v < n_var; ++v) {
    for (std::size_t l = 0; l < n_lang; ++l) column[l] = report.values[l][v];
    across += sample_variance(column);
  }
  double within = 0.0;
  for (std::size_t l = 0; l < n_lang; ++l) {
    within += sample_variance(report.values[l]);
  }
  report.across_variance = across / static_cast<double>(n_var);
  report.within_variance = within / static_cast<double>(n_lang);
  return report;
}

enum class Metric { kMinPerplexity, kAuc };

inline std::string_view metric_name(Metric metric) noexcept {
  return metric == Metric::kMinPerplexity ? "min_perplexity" : "auc";
}

// Fills a matrix from whatever curves are present; absent curves stay empty.
inline MetricMatrix metric_matrix(const CurveSet& curves, Metric metric,
                                  std::vector<VariantKind> variants = {
                                      kAllVariants.begin(), kAllVariants.end()}) {
  MetricMatrix m(curves.languages(), std::move(variants));
  for (std::size_t l = 0; l < m.languages.size(); ++l) {
    for (std::size_t v = 0; v < m.variants.size(); ++v) {
      const auto* c = curves.find(m.languages[l], m.variants[v]);
      if (!c || c->size() == 0) continue;
      if (metric == Metric::kMinPerplexity) {
        m.at(l, v) = min_perplexity(*c).perplexity;
      } else if (c->size() >= 2) {
        m.at(l, v) = auc(*c);
      }
    }
  }
  return m;
}

}  // namespace implang
