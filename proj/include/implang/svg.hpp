#pragma once

// Static SVG renderings of analysis results: per-language learning-curve
// charts and per-metric scatter plots. Output is a pure function of the
// input; numbers are printed with fixed precision so files diff cleanly.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "implang/curves.hpp"
#include "implang/error.hpp"
#include "implang/io.hpp"
#include "implang/stats.hpp"

namespace implang::svg {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
  std::string style_class;                        // "baseline" / "perturbed"
  std::optional<double> mean_error;               // annotated when set
};

struct ChartSpec {
  std::string title;
  std::string x_label = "training step";
  std::string y_label = "validation perplexity";
  std::vector<Series> series;

  void validate() const {
    if (series.empty()) throw ValidationError("chart needs at least one series");
    for (const auto& s : series) {
      if (s.points.empty()) {
        throw ValidationError("series '" + s.label + "' has no points");
      }
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) {
          throw ValidationError("series '" + s.label +
                                "' has a non-finite point");
        }
      }
    }
  }
};

// Canvas geometry shared by both chart kinds.
struct Frame {
  double width = 800;
  double height = 520;
  double left = 80;
  double right = 220;
  double top = 50;
  double bottom = 90;

  double plot_w() const { return width - left - right; }
  double plot_h() const { return height - top - bottom; }
};

namespace detail {

inline std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

inline std::string num(double v) { return fmt("%.2f", v); }

struct Range {
  double lo;
  double hi;

  double map(double v, double out_lo, double out_hi) const {
    return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
  }
};

// y from 0.95 * min to 1.05 * max of the plotted values.
inline Range value_range(double lo, double hi) {
  Range r{0.95 * lo, 1.05 * hi};
  if (r.lo > r.hi) std::swap(r.lo, r.hi);
  if (r.hi - r.lo < 1e-12) {
    r.lo -= 1.0;
    r.hi += 1.0;
  }
  return r;
}

inline Range span_range(double lo, double hi) {
  if (hi - lo < 1e-12) return {lo - 1.0, hi + 1.0};
  return {lo, hi};
}

inline void header(std::string& out, const Frame& f, std::string_view title) {
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(f.width) + "\" height=\"" + num(f.height) + "\" viewBox=\"0 0 " +
         num(f.width) + " " + num(f.height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(f.width) + "\" height=\"" +
         num(f.height) + "\" fill=\"white\"/>\n";
  out += "<text class=\"title\" x=\"" + num(f.left) + "\" y=\"28\" " +
         "font-family=\"sans-serif\" font-size=\"16\">" + escape(title) +
         "</text>\n";
}

inline void axes(std::string& out, const Frame& f, const Range& x,
                 const Range& y, std::string_view x_label,
                 std::string_view y_label, bool numeric_x) {
  const double x0 = f.left, x1 = f.left + f.plot_w();
  const double y0 = f.top + f.plot_h(), y1 = f.top;
  out += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
         num(x1) + "\" y2=\"" + num(y0) + "\"/>\n";
  out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" +
         num(x0) + "\" y2=\"" + num(y1) + "\"/>\n";
  out += "</g>\n";
  out += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double v = y.lo + (y.hi - y.lo) * i / kTicks;
    const double py = y.map(v, y0, y1);
    out += "<text x=\"" + num(x0 - 6) + "\" y=\"" + num(py + 4) +
           "\" text-anchor=\"end\">" + fmt("%.0f", v) + "</text>\n";
  }
  if (numeric_x) {
    for (int i = 0; i <= kTicks; ++i) {
      const double v = x.lo + (x.hi - x.lo) * i / kTicks;
      const double px = x.map(v, x0, x1);
      out += "<text x=\"" + num(px) + "\" y=\"" + num(y0 + 16) +
             "\" text-anchor=\"middle\">" + fmt("%.0f", v) + "</text>\n";
    }
  }
  out += "</g>\n";
  out += "<text class=\"x-label\" x=\"" + num((x0 + x1) / 2) + "\" y=\"" +
         num(y0 + 36) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">" +
         escape(x_label) + "</text>\n";
  out += "<text class=\"y-label\" x=\"18\" y=\"" + num((y0 + y1) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 18 " +
         num((y0 + y1) / 2) + ")\">" + escape(y_label) + "</text>\n";
}

inline constexpr std::string_view kBlue = "#1f77b4";
inline constexpr std::string_view kOrange = "#ff7f0e";

// Two-colour ramp keyed to the sign of ME: green when the perturbed curve is
// below its baseline (positive ME), pink otherwise. Saturation grows with
// |ME| up to 50 perplexity points.
inline std::string me_hue(double me) {
  const double t = std::min(std::abs(me) / 50.0, 1.0);
  const int lo = static_cast<int>(std::lround(235 - 120 * t));
  char buf[16];
  if (me >= 0) {
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", lo, 235, lo);
  } else {
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", 245, lo, 235 - (235 - lo) / 3);
  }
  return buf;
}

}  // namespace detail

inline std::string render_curve_chart(const ChartSpec& spec,
                                      const Frame& frame = {}) {
  spec.validate();
  double xmin = spec.series[0].points[0].first, xmax = xmin;
  double ymin = spec.series[0].points[0].second, ymax = ymin;
  for (const auto& s : spec.series) {
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  const auto xr = detail::span_range(xmin, xmax);
  const auto yr = detail::value_range(ymin, ymax);
  const double x0 = frame.left, x1 = frame.left + frame.plot_w();
  const double y0 = frame.top + frame.plot_h(), y1 = frame.top;

  std::string out;
  detail::header(out, frame, spec.title);
  detail::axes(out, frame, xr, yr, spec.x_label, spec.y_label, true);

  out += "<g class=\"series-group\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const auto color = s.style_class == "baseline" ? detail::kBlue
                                                   : detail::kOrange;
    out += "<polyline class=\"series " + detail::escape(s.style_class) +
           "\" stroke=\"" + std::string(color) + "\" points=\"";
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      if (k) out += ' ';
      out += detail::num(xr.map(s.points[k].first, x0, x1)) + "," +
             detail::num(yr.map(s.points[k].second, y0, y1));
    }
    out += "\"><title>" + detail::escape(s.label) + "</title></polyline>\n";
  }
  out += "</g>\n";

  // Legend with ME badges.
  out += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
  const double lx = x1 + 16;
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const double ly = frame.top + 8 + 22.0 * static_cast<double>(i);
    const auto color = s.style_class == "baseline" ? detail::kBlue
                                                   : detail::kOrange;
    out += "<line x1=\"" + detail::num(lx) + "\" y1=\"" + detail::num(ly) +
           "\" x2=\"" + detail::num(lx + 18) + "\" y2=\"" + detail::num(ly) +
           "\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + detail::num(lx + 24) + "\" y=\"" +
           detail::num(ly + 4) + "\">" + detail::escape(s.label) + "</text>\n";
    if (s.mean_error) {
      const double me = *s.mean_error;
      out += "<rect class=\"me-badge\" x=\"" + detail::num(lx + 130) +
             "\" y=\"" + detail::num(ly - 8) +
             "\" width=\"64\" height=\"16\" rx=\"3\" fill=\"" +
             detail::me_hue(me) + "\"/>\n";
      out += "<text class=\"me-annotation\" x=\"" + detail::num(lx + 162) +
             "\" y=\"" + detail::num(ly + 4) + "\" text-anchor=\"middle\">" +
             detail::fmt("%+.2f", me) + "</text>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

inline void emit_curve_chart(const ChartSpec& spec, const fs::path& path) {
  write_file(path, render_curve_chart(spec));
}

// Learning curves of every variant of one language, with ME badges on the
// impossible variants.
inline ChartSpec language_chart(const CurveSet& curves,
                                const std::string& language,
                                std::span<const PairResult> pairs) {
  ChartSpec spec;
  spec.title = language + ": learning curves";
  for (auto kind : kAllVariants) {
    const auto* c = curves.find(language, kind);
    if (!c) continue;
    Series s;
    s.label = std::string(variant_name(kind));
    s.style_class = is_baseline(kind) ? "baseline" : "perturbed";
    for (const auto& p : c->points()) {
      s.points.emplace_back(static_cast<double>(p.step), p.perplexity);
    }
    for (const auto& r : pairs) {
      if (r.language == language && r.perturbation == kind) {
        s.mean_error = r.mean_error;
      }
    }
    spec.series.push_back(std::move(s));
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Scatter

enum class Glyph { kTriangle, kStar, kDiamond };

// Shape keyed by the baseline a variant is compared against.
inline Glyph glyph_for(VariantKind kind) {
  switch (baseline_of(kind)) {
    case VariantKind::kReverseBaseline: return Glyph::kStar;
    case VariantKind::kHopBaseline: return Glyph::kDiamond;
    default: return Glyph::kTriangle;
  }
}

namespace detail {

inline std::string glyph_path(Glyph g, double cx, double cy, double r) {
  std::string d;
  auto pt = [&](double x, double y, bool first) {
    d += (first ? "M" : " L") + num(x) + "," + num(y);
  };
  switch (g) {
    case Glyph::kTriangle:
      pt(cx, cy - r, true);
      pt(cx + r * 0.866, cy + r * 0.5, false);
      pt(cx - r * 0.866, cy + r * 0.5, false);
      break;
    case Glyph::kDiamond:
      pt(cx, cy - r, true);
      pt(cx + r, cy, false);
      pt(cx, cy + r, false);
      pt(cx - r, cy, false);
      break;
    case Glyph::kStar:
      for (int i = 0; i < 10; ++i) {
        const double a = -M_PI / 2 + i * M_PI / 5;
        const double rr = (i % 2 == 0) ? r : r * 0.45;
        pt(cx + rr * std::cos(a), cy + rr * std::sin(a), i == 0);
      }
      break;
  }
  return d + " Z";
}

inline std::string_view glyph_name(Glyph g) {
  switch (g) {
    case Glyph::kTriangle: return "triangle";
    case Glyph::kStar: return "star";
    case Glyph::kDiamond: return "diamond";
  }
  return "";
}

}  // namespace detail

inline std::string render_scatter(const TypologyReport& report,
                                  const Frame& frame = {}) {
  if (report.languages.empty() || report.variants.empty() ||
      report.values.size() != report.languages.size()) {
    throw ValidationError("scatter needs a complete report");
  }
  double lo = report.values[0][0], hi = lo;
  for (const auto& row : report.values) {
    if (row.size() != report.variants.size()) {
      throw ValidationError("scatter needs a complete report");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw ValidationError("non-finite metric value");
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const auto yr = detail::value_range(lo, hi);
  const double x0 = frame.left, x1 = frame.left + frame.plot_w();
  const double y0 = frame.top + frame.plot_h(), y1 = frame.top;
  const auto n_lang = report.languages.size();
  const auto n_var = report.variants.size();
  const double slot = (x1 - x0) / static_cast<double>(n_lang);

  std::string out;
  detail::header(out, frame, report.metric_name + " by language and variant");
  detail::axes(out, frame, {0, 1}, yr, "language", report.metric_name, false);

  out += "<g class=\"language-labels\" font-family=\"sans-serif\" "
         "font-size=\"11\">\n";
  for (std::size_t l = 0; l < n_lang; ++l) {
    const double cx = x0 + slot * (static_cast<double>(l) + 0.5);
    out += "<text x=\"" + detail::num(cx) + "\" y=\"" + detail::num(y0 + 16) +
           "\" text-anchor=\"middle\">" + detail::escape(report.languages[l]) +
           "</text>\n";
  }
  out += "</g>\n<g class=\"glyphs\" stroke=\"black\" stroke-width=\"0.5\">\n";
  for (std::size_t l = 0; l < n_lang; ++l) {
    for (std::size_t v = 0; v < n_var; ++v) {
      const auto kind = report.variants[v];
      const auto g = glyph_for(kind);
      // Spread a language's variants across its slot.
      const double offset =
          n_var > 1 ? (static_cast<double>(v) / static_cast<double>(n_var - 1) -
                       0.5) * slot * 0.6
                    : 0.0;
      const double cx = x0 + slot * (static_cast<double>(l) + 0.5) + offset;
      const double cy = yr.map(report.values[l][v], y0, y1);
      const auto color = is_baseline(kind) ? detail::kBlue : detail::kOrange;
      out += "<path class=\"glyph " + std::string(detail::glyph_name(g)) +
             (is_baseline(kind) ? " baseline" : " perturbed") + "\" fill=\"" +
             std::string(color) + "\" d=\"" + detail::glyph_path(g, cx, cy, 5) +
             "\"><title>" + detail::escape(report.languages[l]) + " " +
             std::string(variant_name(kind)) + ": " +
             detail::num(report.values[l][v]) + "</title></path>\n";
    }
  }
  out += "</g>\n";
  out += "<text class=\"variances\" x=\"" + detail::num(x0) + "\" y=\"" +
         detail::num(frame.height - 18) +
         "\" font-family=\"sans-serif\" font-size=\"12\">across-language "
         "variance: " +
         detail::fmt("%.4f", report.across_variance) +
         "; within-language variance: " +
         detail::fmt("%.4f", report.within_variance) + "</text>\n";
  out += "</svg>\n";
  return out;
}

inline void emit_scatter(const TypologyReport& report, const fs::path& path) {
  write_file(path, render_scatter(report));
}

}  // namespace implang::svg
