#pragma once

// Sentence-level perturbations that turn an attested-language corpus into an
// "impossible" counterpart, plus the baselines they are compared against.
//
// Randomized choices (the global shuffle permutation and the <rev> insertion
// point) come from seed_for() so every output is a pure function of
// (corpus, annotations, variant, global seed). Marker positions are drawn once
// into a MarkerManifest and then read by every variant, which is what keeps a
// perturbation and its baseline aligned token for token.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "implang/corpus.hpp"
#include "implang/error.hpp"
#include "implang/prng.hpp"

namespace implang {

enum class VariantKind {
  kNoPerturb,
  kShuffleGlobal,
  kShuffleLocal,
  kSwitch,
  kReverseBaseline,
  kReversePartial,
  kReverseFull,
  kHopBaseline,
  kHop,
};

inline constexpr std::array<VariantKind, 9> kAllVariants = {
    VariantKind::kNoPerturb,       VariantKind::kShuffleGlobal,
    VariantKind::kShuffleLocal,    VariantKind::kSwitch,
    VariantKind::kReverseBaseline, VariantKind::kReversePartial,
    VariantKind::kReverseFull,     VariantKind::kHopBaseline,
    VariantKind::kHop,
};

inline constexpr std::string_view variant_name(VariantKind kind) noexcept {
  switch (kind) {
    case VariantKind::kNoPerturb: return "no_perturb";
    case VariantKind::kShuffleGlobal: return "shuffle_global";
    case VariantKind::kShuffleLocal: return "shuffle_local";
    case VariantKind::kSwitch: return "switch";
    case VariantKind::kReverseBaseline: return "reverse_baseline";
    case VariantKind::kReversePartial: return "reverse_partial";
    case VariantKind::kReverseFull: return "reverse_full";
    case VariantKind::kHopBaseline: return "hop_baseline";
    case VariantKind::kHop: return "hop";
  }
  return "";
}

// Accepts the snake_case names above in any letter case, with '-' or ' '
// accepted in place of '_' ("NO PERTURB", "reverse-full").
inline std::optional<VariantKind> parse_variant(std::string_view name) {
  std::string norm;
  norm.reserve(name.size());
  for (char c : name) {
    if (c == '-' || c == ' ') c = '_';
    norm.push_back(static_cast<char>(
        (c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c));
  }
  for (auto kind : kAllVariants) {
    if (variant_name(kind) == norm) return kind;
  }
  return std::nullopt;
}

inline VariantKind variant_from_name(std::string_view name) {
  if (auto kind = parse_variant(name)) return *kind;
  throw ConfigError("unknown variant '" + std::string(name) + "'");
}

inline constexpr bool uses_rev_marker(VariantKind kind) noexcept {
  return kind == VariantKind::kReverseBaseline ||
         kind == VariantKind::kReversePartial ||
         kind == VariantKind::kReverseFull;
}

inline constexpr bool uses_hop_marker(VariantKind kind) noexcept {
  return kind == VariantKind::kHopBaseline || kind == VariantKind::kHop;
}

inline constexpr bool uses_marker(VariantKind kind) noexcept {
  return uses_rev_marker(kind) || uses_hop_marker(kind);
}

inline constexpr bool is_baseline(VariantKind kind) noexcept {
  return kind == VariantKind::kNoPerturb ||
         kind == VariantKind::kReverseBaseline ||
         kind == VariantKind::kHopBaseline;
}

// The control each impossible variant is compared against; baselines map to
// themselves.
inline constexpr VariantKind baseline_of(VariantKind kind) noexcept {
  switch (kind) {
    case VariantKind::kShuffleGlobal:
    case VariantKind::kShuffleLocal:
    case VariantKind::kSwitch: return VariantKind::kNoPerturb;
    case VariantKind::kReversePartial:
    case VariantKind::kReverseFull: return VariantKind::kReverseBaseline;
    case VariantKind::kHop: return VariantKind::kHopBaseline;
    default: return kind;
  }
}

inline constexpr std::string_view kDefaultRevMarker = "<rev>";
inline constexpr std::string_view kDefaultHopMarker = "\u02CC";  // ˌ

inline constexpr std::size_t kHopBaselineOffset = 1;
inline constexpr std::size_t kHopOffset = 4;

struct PerturbationVariant {
  VariantKind kind = VariantKind::kNoPerturb;
  std::optional<Token> marker;

  // Checks that a marker is present exactly when the kind needs one.
  void validate() const {
    if (uses_marker(kind) && !marker) {
      throw ConfigError("variant '" + std::string(variant_name(kind)) +
                        "' requires a marker token");
    }
    if (!uses_marker(kind) && marker) {
      throw ConfigError("variant '" + std::string(variant_name(kind)) +
                        "' does not take a marker");
    }
  }
};

inline PerturbationVariant make_variant(
    VariantKind kind, std::string_view rev_marker = kDefaultRevMarker,
    std::string_view hop_marker = kDefaultHopMarker) {
  PerturbationVariant v{kind, std::nullopt};
  if (uses_rev_marker(kind)) v.marker.emplace(rev_marker);
  if (uses_hop_marker(kind)) v.marker.emplace(hop_marker);
  return v;
}

// ---------------------------------------------------------------------------
// Manifest

struct ManifestEntry {
  std::size_t rev_position = 0;
  std::vector<std::size_t> verb_positions;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct MarkerManifest {
  std::uint64_t global_seed = 0;
  std::map<std::size_t, ManifestEntry> entries;

  const ManifestEntry& at(std::size_t sentence_index) const {
    auto it = entries.find(sentence_index);
    if (it == entries.end()) {
      throw ValidationError("manifest has no entry for sentence " +
                            std::to_string(sentence_index));
    }
    return it->second;
  }

  friend bool operator==(const MarkerManifest&,
                         const MarkerManifest&) = default;
};

inline nlohmann::json to_json(const MarkerManifest& manifest) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [index, entry] : manifest.entries) {
    entries[std::to_string(index)] = {
        {"rev_position", entry.rev_position},
        {"verb_positions", entry.verb_positions}};
  }
  return {{"global_seed", manifest.global_seed}, {"entries", entries}};
}

inline MarkerManifest manifest_from_json(const nlohmann::json& j) {
  MarkerManifest m;
  try {
    for (const auto& [key, _] : j.items()) {
      if (key != "global_seed" && key != "entries") {
        throw ValidationError("unknown manifest key '" + key + "'");
      }
    }
    m.global_seed = j.at("global_seed").get<std::uint64_t>();
    for (const auto& [key, value] : j.at("entries").items()) {
      std::size_t used = 0;
      const auto index = std::stoull(key, &used);
      if (used != key.size()) throw ValidationError("bad index '" + key + "'");
      ManifestEntry e;
      e.rev_position = value.at("rev_position").get<std::size_t>();
      e.verb_positions =
          value.at("verb_positions").get<std::vector<std::size_t>>();
      m.entries.emplace(index, std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed manifest: ") + ex.what());
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed manifest: non-numeric sentence index");
  }
  return m;
}

// ---------------------------------------------------------------------------
// Word-order perturbations

// Fisher-Yates over token positions, seeded by sentence length only: all
// sentences of equal length receive the same permutation.
inline Sentence shuffle_global(const Sentence& sentence,
                               std::uint64_t global_seed) {
  auto tokens = sentence.tokens();
  Prng prng = seed_for(global_seed, tokens.size(),
                       static_cast<std::uint64_t>(Stream::kShuffleGlobal));
  fisher_yates(tokens, prng);
  return {std::move(tokens), sentence.index()};
}

// Swaps every even-indexed token with its successor.
inline Sentence shuffle_local(const Sentence& sentence) {
  auto tokens = sentence.tokens();
  for (std::size_t i = 0; i + 1 < tokens.size(); i += 2) {
    std::swap(tokens[i], tokens[i + 1]);
  }
  return {std::move(tokens), sentence.index()};
}

// Exchanges tokens 0 and 2; identity for sentences shorter than 3.
inline Sentence switch_tokens(const Sentence& sentence) {
  auto tokens = sentence.tokens();
  if (tokens.size() >= 3) std::swap(tokens[0], tokens[2]);
  return {std::move(tokens), sentence.index()};
}

// ---------------------------------------------------------------------------
// Reversal family

// Insertion point in [0, len] for the <rev> marker of one sentence.
inline std::size_t draw_rev_position(const Sentence& sentence,
                                     std::uint64_t global_seed) {
  Prng prng = seed_for(global_seed, sentence.index(),
                       static_cast<std::uint64_t>(Stream::kRevPosition));
  return prng.bounded(sentence.size() + 1);
}

namespace detail {

inline void check_position(const Sentence& sentence, std::size_t pos) {
  if (pos > sentence.size()) {
    throw ValidationError("marker position " + std::to_string(pos) +
                          " outside [0, " + std::to_string(sentence.size()) +
                          "] for sentence " +
                          std::to_string(sentence.index()));
  }
}

}  // namespace detail

inline Sentence reverse_baseline(const Sentence& sentence, std::size_t pos,
                                 const Token& marker) {
  detail::check_position(sentence, pos);
  std::vector<Token> out;
  out.reserve(sentence.size() + 1);
  out.insert(out.end(), sentence.tokens().begin(),
             sentence.tokens().begin() + pos);
  out.push_back(marker);
  out.insert(out.end(), sentence.tokens().begin() + pos,
             sentence.tokens().end());
  return {std::move(out), sentence.index()};
}

// Baseline with everything after the marker reversed.
inline Sentence reverse_partial(const Sentence& sentence, std::size_t pos,
                                const Token& marker) {
  auto tokens = reverse_baseline(sentence, pos, marker).tokens();
  std::reverse(tokens.begin() + pos + 1, tokens.end());
  return {std::move(tokens), sentence.index()};
}

// Baseline reversed end to end, marker included.
inline Sentence reverse_full(const Sentence& sentence, std::size_t pos,
                             const Token& marker) {
  auto tokens = reverse_baseline(sentence, pos, marker).tokens();
  std::reverse(tokens.begin(), tokens.end());
  return {std::move(tokens), sentence.index()};
}

// ---------------------------------------------------------------------------
// Verb-hop family

// Marker insertion points min(v + offset, len) for each verb index v, all on
// the original token indices.
inline std::vector<std::size_t> hop_positions(
    std::size_t sentence_length, std::span<const std::size_t> verbs,
    std::size_t offset) {
  std::vector<std::size_t> out;
  out.reserve(verbs.size());
  for (auto v : verbs) out.push_back(std::min(v + offset, sentence_length));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> hop_positions(
    const Sentence& sentence, const PosAnnotation& annotation,
    std::size_t offset, const VerbTagSet& verb_tags = default_verb_tags()) {
  if (annotation.tags.size() != sentence.size()) {
    throw ValidationError(
        "annotation for sentence " + std::to_string(sentence.index()) +
        " has " + std::to_string(annotation.tags.size()) + " tags for " +
        std::to_string(sentence.size()) + " tokens");
  }
  const auto verbs = verb_indices(annotation, verb_tags);
  return hop_positions(sentence.size(), verbs, offset);
}

// One pass over the sentence: before original token t, one marker per
// position equal to t; positions equal to len append at the end.
inline Sentence insert_markers(const Sentence& sentence,
                               std::span<const std::size_t> positions,
                               const Token& marker) {
  if (!std::is_sorted(positions.begin(), positions.end())) {
    throw ValidationError("marker positions must be sorted ascending");
  }
  if (!positions.empty() && positions.back() > sentence.size()) {
    throw ValidationError("marker position beyond sentence end");
  }
  std::vector<Token> out;
  out.reserve(sentence.size() + positions.size());
  std::size_t next = 0;
  for (std::size_t t = 0; t <= sentence.size(); ++t) {
    while (next < positions.size() && positions[next] == t) {
      out.push_back(marker);
      ++next;
    }
    if (t < sentence.size()) out.push_back(sentence[t]);
  }
  return {std::move(out), sentence.index()};
}

// Drops every occurrence of `marker`. Inverse of the marker insertions.
inline std::vector<Token> strip_markers(const Sentence& sentence,
                                        const Token& marker) {
  std::vector<Token> out;
  out.reserve(sentence.size());
  for (const auto& t : sentence.tokens()) {
    if (t != marker) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus level

// Draws the per-sentence marker positions. `annotations` may be empty when no
// hop variant will be produced; verb_positions are then left empty.
inline MarkerManifest build_manifest(
    const Corpus& corpus, std::span<const PosAnnotation> annotations,
    std::uint64_t global_seed,
    const VerbTagSet& verb_tags = default_verb_tags()) {
  if (!annotations.empty() && annotations.size() != corpus.size()) {
    throw ValidationError("annotations cover " +
                          std::to_string(annotations.size()) + " of " +
                          std::to_string(corpus.size()) + " sentences");
  }
  MarkerManifest m;
  m.global_seed = global_seed;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& s = corpus[i];
    ManifestEntry e;
    e.rev_position = draw_rev_position(s, global_seed);
    if (!annotations.empty()) {
      if (annotations[i].tags.size() != s.size()) {
        throw ValidationError("annotation length mismatch at sentence " +
                              std::to_string(s.index()));
      }
      e.verb_positions = verb_indices(annotations[i], verb_tags);
    }
    m.entries.emplace(s.index(), std::move(e));
  }
  return m;
}

// Throws if `marker` already occurs as a token of `corpus`.
inline void check_marker_absent(const Corpus& corpus, const Token& marker) {
  for (const auto& s : corpus) {
    for (const auto& t : s.tokens()) {
      if (t == marker) {
        throw ValidationError("marker '" + marker.text() +
                              "' already occurs in sentence " +
                              std::to_string(s.index()));
      }
    }
  }
}

struct ApplyOptions {
  std::span<const PosAnnotation> annotations;
  const MarkerManifest* manifest = nullptr;
  VerbTagSet verb_tags = default_verb_tags();
};

// Applies one variant to every sentence. Marker variants read their positions
// from the manifest and never redraw them. Hop variants additionally require
// annotations and check that the manifest's verb positions agree with them.
inline Corpus apply_variant(const Corpus& corpus,
                            const PerturbationVariant& variant,
                            const ApplyOptions& options = {}) {
  variant.validate();
  const auto kind = variant.kind;
  if (uses_marker(kind)) {
    if (options.manifest == nullptr) {
      throw ConfigError("variant '" + std::string(variant_name(kind)) +
                        "' requires a marker manifest");
    }
    check_marker_absent(corpus, *variant.marker);
  }
  if (uses_hop_marker(kind)) {
    if (options.annotations.size() != corpus.size()) {
      throw ConfigError("variant '" + std::string(variant_name(kind)) +
                        "' requires POS annotations for every sentence");
    }
  }
  if (kind == VariantKind::kNoPerturb) return corpus;

  const std::uint64_t seed =
      options.manifest ? options.manifest->global_seed : 0;
  std::vector<Sentence> out;
  out.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& s = corpus[i];
    switch (kind) {
      case VariantKind::kShuffleGlobal:
        out.push_back(shuffle_global(s, seed));
        break;
      case VariantKind::kShuffleLocal:
        out.push_back(shuffle_local(s));
        break;
      case VariantKind::kSwitch:
        out.push_back(switch_tokens(s));
        break;
      case VariantKind::kReverseBaseline:
        out.push_back(reverse_baseline(
            s, options.manifest->at(s.index()).rev_position, *variant.marker));
        break;
      case VariantKind::kReversePartial:
        out.push_back(reverse_partial(
            s, options.manifest->at(s.index()).rev_position, *variant.marker));
        break;
      case VariantKind::kReverseFull:
        out.push_back(reverse_full(
            s, options.manifest->at(s.index()).rev_position, *variant.marker));
        break;
      case VariantKind::kHopBaseline:
      case VariantKind::kHop: {
        const auto& ann = options.annotations[i];
        if (ann.tags.size() != s.size()) {
          throw ValidationError("annotation length mismatch at sentence " +
                                std::to_string(s.index()));
        }
        const auto verbs = verb_indices(ann, options.verb_tags);
        if (options.manifest->at(s.index()).verb_positions != verbs) {
          throw ValidationError(
              "manifest verb positions disagree with annotations at "
              "sentence " +
              std::to_string(s.index()));
        }
        const auto offset =
            kind == VariantKind::kHop ? kHopOffset : kHopBaselineOffset;
        out.push_back(insert_markers(s, hop_positions(s.size(), verbs, offset),
                                     *variant.marker));
        break;
      }
      case VariantKind::kNoPerturb:
        break;
    }
  }
  return Corpus(std::move(out));
}

// Overload for the shuffle-only variants, which need just the seed.
inline Corpus apply_variant(const Corpus& corpus,
                            const PerturbationVariant& variant,
                            std::uint64_t global_seed) {
  MarkerManifest seed_only;
  seed_only.global_seed = global_seed;
  ApplyOptions options;
  options.manifest = &seed_only;
  if (uses_marker(variant.kind)) {
    throw ConfigError("variant '" + std::string(variant_name(variant.kind)) +
                      "' requires a full marker manifest");
  }
  return apply_variant(corpus, variant, options);
}

// ---------------------------------------------------------------------------
// Parity verification

struct VariantOutputs {
  std::map<VariantKind, Corpus> corpora;
};

// Checks every structural invariant linking the variants of one corpus to the
// original: sentence counts, token multisets, marker counts and positions,
// and the reversal identities. Returns one message per violation.
inline std::vector<std::string> check_parity(const Corpus& original,
                                             const VariantOutputs& outputs,
                                             const Token& rev_marker,
                                             const Token& hop_marker) {
  std::vector<std::string> problems;
  auto report = [&](VariantKind kind, std::size_t i, const std::string& msg) {
    problems.push_back(std::string(variant_name(kind)) + " sentence " +
                       std::to_string(i) + ": " + msg);
  };
  auto sorted_tokens = [](const std::vector<Token>& tokens) {
    auto copy = tokens;
    std::sort(copy.begin(), copy.end());
    return copy;
  };
  auto find = [&](VariantKind kind) -> const Corpus* {
    auto it = outputs.corpora.find(kind);
    return it == outputs.corpora.end() ? nullptr : &it->second;
  };

  for (const auto& [kind, corpus] : outputs.corpora) {
    if (corpus.size() != original.size()) {
      problems.push_back(std::string(variant_name(kind)) + ": " +
                         std::to_string(corpus.size()) + " sentences, expected " +
                         std::to_string(original.size()));
      continue;
    }
    for (std::size_t i = 0; i < original.size(); ++i) {
      const auto& src = original[i];
      const auto& out = corpus[i];
      switch (kind) {
        case VariantKind::kNoPerturb:
          if (out.tokens() != src.tokens()) report(kind, i, "differs");
          break;
        case VariantKind::kShuffleGlobal:
        case VariantKind::kShuffleLocal:
        case VariantKind::kSwitch:
          if (sorted_tokens(out.tokens()) != sorted_tokens(src.tokens())) {
            report(kind, i, "token multiset changed");
          }
          break;
        case VariantKind::kReverseBaseline:
        case VariantKind::kReversePartial:
        case VariantKind::kReverseFull: {
          if (out.size() != src.size() + 1) report(kind, i, "length != n+1");
          const auto n_markers = std::count(out.tokens().begin(),
                                            out.tokens().end(), rev_marker);
          if (n_markers != 1) report(kind, i, "expected exactly one marker");
          auto stripped = strip_markers(out, rev_marker);
          if (kind == VariantKind::kReverseBaseline && stripped != src.tokens()) {
            report(kind, i, "marker strip does not recover original");
          }
          if (kind == VariantKind::kReverseFull) {
            std::reverse(stripped.begin(), stripped.end());
            if (stripped != src.tokens()) {
              report(kind, i, "reversed strip does not recover original");
            }
          }
          break;
        }
        case VariantKind::kHopBaseline:
        case VariantKind::kHop:
          if (strip_markers(out, hop_marker) != src.tokens()) {
            report(kind, i, "marker strip does not recover original");
          }
          break;
      }
    }
  }

  // Cross-variant relations.
  const Corpus* rb = find(VariantKind::kReverseBaseline);
  const Corpus* rp = find(VariantKind::kReversePartial);
  const Corpus* rf = find(VariantKind::kReverseFull);
  const Corpus* hb = find(VariantKind::kHopBaseline);
  const Corpus* hp = find(VariantKind::kHop);
  if (rb && rb->size() == original.size()) {
    for (std::size_t i = 0; i < original.size(); ++i) {
      const auto& base = (*rb)[i].tokens();
      const auto marker_at = static_cast<std::size_t>(
          std::find(base.begin(), base.end(), rev_marker) - base.begin());
      if (rf && rf->size() == original.size()) {
        auto rev = (*rf)[i].tokens();
        std::reverse(rev.begin(), rev.end());
        if (rev != base) {
          report(VariantKind::kReverseFull, i, "reversal != reverse_baseline");
        }
      }
      if (rp && rp->size() == original.size() && marker_at < base.size()) {
        const auto& part = (*rp)[i].tokens();
        bool ok = part.size() == base.size() &&
                  std::equal(base.begin(), base.begin() + marker_at + 1,
                             part.begin()) &&
                  std::equal(base.begin() + marker_at + 1, base.end(),
                             part.rbegin());
        if (!ok) {
          report(VariantKind::kReversePartial, i,
                 "not baseline prefix + reversed suffix");
        }
      }
    }
  }
  if (hb && hp && hb->size() == original.size() &&
      hp->size() == original.size()) {
    for (std::size_t i = 0; i < original.size(); ++i) {
      if ((*hb)[i].size() != (*hp)[i].size()) {
        report(VariantKind::kHop, i, "length differs from hop_baseline");
      }
    }
  }
  return problems;
}

}  // namespace implang
