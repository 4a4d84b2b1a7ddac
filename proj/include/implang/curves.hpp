#pragma once

// Learning curves (validation perplexity per training step) and the
// per-curve / per-pair statistics computed on them.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "implang/error.hpp"
#include "implang/perturb.hpp"

namespace implang {

struct CurvePoint {
  std::int64_t step;
  double perplexity;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

class LearningCurve {
 public:
  LearningCurve(std::string language, VariantKind variant,
                std::vector<CurvePoint> points)
      : language_(std::move(language)),
        variant_(variant),
        points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const auto& p = points_[i];
      if (p.step <= 0) throw ValidationError("curve steps must be positive");
      if (i > 0 && p.step <= points_[i - 1].step) {
        throw ValidationError("curve steps must be strictly increasing");
      }
      if (!std::isfinite(p.perplexity) || p.perplexity <= 0.0) {
        throw ValidationError("curve perplexities must be positive and finite");
      }
    }
  }

  const std::string& language() const noexcept { return language_; }
  VariantKind variant() const noexcept { return variant_; }
  const std::vector<CurvePoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::string language_;
  VariantKind variant_;
  std::vector<CurvePoint> points_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  text = trim(text);
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace detail

// Reads a "step,perplexity" CSV. Row numbers in errors are 1-based file line
// numbers. Recoverable oddities (blank lines, CR line endings) are appended
// to `warnings` when it is non-null.
inline LearningCurve parse_curve(std::istream& in, std::string language,
                                 VariantKind variant,
                                 std::vector<std::string>* warnings = nullptr) {
  auto warn = [&](std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
  };
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  std::vector<CurvePoint> points;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
      warn("line " + std::to_string(line_no) + ": CRLF line ending");
    }
    if (detail::trim(line).empty()) {
      warn("line " + std::to_string(line_no) + ": blank line skipped");
      continue;
    }
    if (!saw_header) {
      if (detail::trim(line) != "step,perplexity") {
        throw ParseError("expected header 'step,perplexity'", line_no);
      }
      saw_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError("expected two comma-separated fields", line_no);
    }
    CurvePoint p{};
    const std::string_view view(line);
    if (!detail::parse_number(view.substr(0, comma), p.step)) {
      throw ParseError("step is not an integer", line_no);
    }
    if (!detail::parse_number(view.substr(comma + 1), p.perplexity)) {
      throw ParseError("perplexity is not a number", line_no);
    }
    if (p.step <= 0) throw ParseError("step must be positive", line_no);
    if (!points.empty() && p.step <= points.back().step) {
      throw ParseError("step does not increase", line_no);
    }
    if (!std::isfinite(p.perplexity) || p.perplexity <= 0.0) {
      throw ParseError("perplexity must be positive and finite", line_no);
    }
    points.push_back(p);
  }
  if (!saw_header) throw ParseError("missing header 'step,perplexity'", 1);
  if (points.empty()) warn("curve has no data rows");
  return {std::move(language), variant, std::move(points)};
}

inline LearningCurve parse_curve(std::string_view text, std::string language,
                                 VariantKind variant,
                                 std::vector<std::string>* warnings = nullptr) {
  std::istringstream in{std::string(text)};
  return parse_curve(in, std::move(language), variant, warnings);
}

inline void write_curve(std::ostream& out, const LearningCurve& curve) {
  out << "step,perplexity\n";
  char buf[64];
  for (const auto& p : curve.points()) {
    std::snprintf(buf, sizeof buf, "%lld,%.2f\n",
                  static_cast<long long>(p.step), p.perplexity);
    out << buf;
  }
}

// ---------------------------------------------------------------------------
// Single-curve metrics

// Lowest perplexity point; the earliest step wins ties.
inline CurvePoint min_perplexity(const LearningCurve& curve) {
  if (curve.size() == 0) throw ValidationError("empty curve");
  const auto& pts = curve.points();
  return *std::min_element(pts.begin(), pts.end(),
                           [](const CurvePoint& a, const CurvePoint& b) {
                             return a.perplexity < b.perplexity;
                           });
}

// Composite trapezoidal area under the curve, in perplexity x steps.
inline double auc(const LearningCurve& curve) {
  const auto& pts = curve.points();
  if (pts.size() < 2) {
    throw ValidationError("AUC needs at least two points");
  }
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double width = static_cast<double>(pts[i + 1].step - pts[i].step);
    area += width * (pts[i].perplexity + pts[i + 1].perplexity) / 2.0;
  }
  return area;
}

// ---------------------------------------------------------------------------
// Pairs

/// A baseline and a perturbed curve on an identical step grid.
class CurvePair {
 public:
  CurvePair(const LearningCurve& baseline, const LearningCurve& perturbed)
      : baseline_(&baseline), perturbed_(&perturbed) {
    const auto& b = baseline.points();
    const auto& m = perturbed.points();
    if (b.size() != m.size()) {
      throw ValidationError("curve grids differ in length (" +
                            std::to_string(b.size()) + " vs " +
                            std::to_string(m.size()) + ")");
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].step != m[i].step) {
        throw ValidationError("curve grids differ at point " +
                              std::to_string(i) + " (step " +
                              std::to_string(b[i].step) + " vs " +
                              std::to_string(m[i].step) + ")");
      }
    }
    if (b.empty()) throw ValidationError("cannot pair empty curves");
  }

  const LearningCurve& baseline() const noexcept { return *baseline_; }
  const LearningCurve& perturbed() const noexcept { return *perturbed_; }
  std::size_t n_points() const noexcept { return baseline_->size(); }

 private:
  const LearningCurve* baseline_;
  const LearningCurve* perturbed_;
};

// Mean of baseline-minus-perturbed over the shared grid. Negative means the
// attested language's curve sits below its perturbed counterpart.
inline double mean_error(const CurvePair& pair) {
  const auto& b = pair.baseline().points();
  const auto& m = pair.perturbed().points();
  double sum = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    sum += b[i].perplexity - m[i].perplexity;
  }
  return sum / static_cast<double>(b.size());
}

inline double mean_error(const LearningCurve& baseline,
                         const LearningCurve& perturbed) {
  return mean_error(CurvePair(baseline, perturbed));
}

// |ME| below this is within reach of two-decimal rounding noise.
inline constexpr double kFragileMeanError = 0.5;

struct PairResult {
  std::string language;
  VariantKind perturbation;
  VariantKind baseline;
  double mean_error;
  bool expected_direction;  // mean_error < 0
  bool fragile;             // |mean_error| < kFragileMeanError
};

/// Curves keyed by (language, variant); remembers language insertion order.
class CurveSet {
 public:
  void add(LearningCurve curve) {
    const auto& lang = curve.language();
    if (std::find(languages_.begin(), languages_.end(), lang) ==
        languages_.end()) {
      languages_.push_back(lang);
    }
    auto key = std::make_pair(lang, curve.variant());
    if (curves_.count(key)) {
      throw ValidationError("duplicate curve for (" + lang + ", " +
                            std::string(variant_name(curve.variant())) + ")");
    }
    curves_.emplace(std::move(key), std::move(curve));
  }

  const LearningCurve* find(const std::string& language,
                            VariantKind variant) const {
    auto it = curves_.find({language, variant});
    return it == curves_.end() ? nullptr : &it->second;
  }

  const LearningCurve& at(const std::string& language,
                          VariantKind variant) const {
    if (const auto* c = find(language, variant)) return *c;
    throw ValidationError("missing curve for (" + language + ", " +
                          std::string(variant_name(variant)) + ")");
  }

  const std::vector<std::string>& languages() const noexcept {
    return languages_;
  }
  std::size_t size() const noexcept { return curves_.size(); }

 private:
  std::vector<std::string> languages_;
  std::map<std::pair<std::string, VariantKind>, LearningCurve> curves_;
};

/// Which impossible variant is compared against which baseline.
using PairingScheme = std::vector<std::pair<VariantKind, VariantKind>>;

inline PairingScheme default_pairing() {
  PairingScheme scheme;
  for (auto kind : kAllVariants) {
    if (!is_baseline(kind)) scheme.emplace_back(kind, baseline_of(kind));
  }
  return scheme;
}

// One result per (language, impossible variant), languages in set order and
// variants in scheme order.
inline std::vector<PairResult> pair_all(
    const CurveSet& curves, const PairingScheme& scheme = default_pairing()) {
  std::vector<PairResult> out;
  for (const auto& lang : curves.languages()) {
    for (const auto& [perturbed, baseline] : scheme) {
      const auto& b = curves.at(lang, baseline);
      const auto& m = curves.at(lang, perturbed);
      const double me = mean_error(b, m);
      out.push_back({lang, perturbed, baseline, me, me < 0.0,
                     std::abs(me) < kFragileMeanError});
    }
  }
  return out;
}

inline std::size_t count_expected(std::span<const PairResult> results) {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(),
                    [](const PairResult& r) { return r.expected_direction; }));
}

inline std::size_t count_expected(std::span<const PairResult> results,
                                  VariantKind perturbation) {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [perturbation](const PairResult& r) {
        return r.perturbation == perturbation && r.expected_direction;
      }));
}

}  // namespace implang
