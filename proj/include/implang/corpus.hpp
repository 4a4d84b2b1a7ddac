#pragma once

// Tokenized corpora, vocabularies, POS annotations and the dataset pipeline
// steps that operate on them (unknown-word filtering, token-budget subsets,
// train/valid/test splits).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "implang/error.hpp"
#include "implang/prng.hpp"

namespace implang {

namespace detail {

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Returns the byte offset of the first invalid sequence, or npos.
inline std::size_t find_invalid_utf8(std::string_view s) noexcept {
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = p[i];
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      if ((p[i + k] & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (p[i + k] & 0x3F);
    }
    // Overlong encodings, surrogates and out-of-range code points.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace detail

/// A single whitespace-free, non-empty token.
class Token {
 public:
  explicit Token(std::string text) : text_(std::move(text)) {
    if (text_.empty()) throw ValidationError("token must be non-empty");
    if (std::any_of(text_.begin(), text_.end(), detail::is_space)) {
      throw ValidationError("token contains whitespace: '" + text_ + "'");
    }
  }
  explicit Token(std::string_view text) : Token(std::string(text)) {}
  explicit Token(const char* text) : Token(std::string(text)) {}

  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const Token&, const Token&) = default;
  friend auto operator<=>(const Token&, const Token&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Token& t) {
    return os << t.text_;
  }

 private:
  std::string text_;
};

/// One line of a corpus. `index` is the 0-based ordinal of the sentence in
/// the corpus it belongs to.
class Sentence {
 public:
  Sentence(std::vector<Token> tokens, std::size_t index)
      : tokens_(std::move(tokens)), index_(index) {
    if (tokens_.empty()) throw ValidationError("sentence must be non-empty");
  }

  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  std::size_t index() const noexcept { return index_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }

  Sentence with_index(std::size_t index) const { return {tokens_, index}; }

  // Space-joined rendering, no trailing newline.
  std::string joined() const {
    std::string out;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (i) out.push_back(' ');
      out += tokens_[i].text();
    }
    return out;
  }

  friend bool operator==(const Sentence&, const Sentence&) = default;

 private:
  std::vector<Token> tokens_;
  std::size_t index_;
};

// Builds a sentence from plain strings; mostly for tests and tools.
inline Sentence make_sentence(std::span<const std::string_view> words,
                              std::size_t index = 0) {
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (auto w : words) tokens.emplace_back(w);
  return {std::move(tokens), index};
}

inline Sentence make_sentence(std::initializer_list<std::string_view> words,
                              std::size_t index = 0) {
  return make_sentence(std::span<const std::string_view>(words.begin(),
                                                         words.size()),
                       index);
}

class Corpus {
 public:
  Corpus() = default;

  // Sentences are re-indexed densely from 0 in the given order.
  explicit Corpus(std::vector<Sentence> sentences) {
    sentences_.reserve(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (sentences[i].index() == i) {
        sentences_.push_back(std::move(sentences[i]));
      } else {
        sentences_.push_back(sentences[i].with_index(i));
      }
      token_count_ += sentences_.back().size();
    }
  }

  const std::vector<Sentence>& sentences() const noexcept {
    return sentences_;
  }
  std::size_t size() const noexcept { return sentences_.size(); }
  bool empty() const noexcept { return sentences_.empty(); }
  std::size_t token_count() const noexcept { return token_count_; }
  const Sentence& operator[](std::size_t i) const { return sentences_[i]; }

  auto begin() const noexcept { return sentences_.begin(); }
  auto end() const noexcept { return sentences_.end(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  std::vector<Sentence> sentences_;
  std::size_t token_count_ = 0;
};

// Parses line-oriented UTF-8 text. Blank lines are skipped; a sentence's
// index counts the non-blank lines before it.
inline Corpus parse_corpus(std::istream& in) {
  std::vector<Sentence> sentences;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::find_invalid_utf8(line) != std::string_view::npos) {
      throw ParseError("invalid UTF-8 byte sequence", line_no);
    }
    auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    std::vector<Token> tokens;
    tokens.reserve(fields.size());
    for (auto f : fields) tokens.emplace_back(f);
    sentences.emplace_back(std::move(tokens), sentences.size());
  }
  return Corpus(std::move(sentences));
}

inline Corpus parse_corpus(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in);
}

// One sentence per line, tokens joined by single spaces, LF terminated.
inline void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& s : corpus) out << s.joined() << '\n';
}

inline std::string to_text(const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(out, corpus);
  return out.str();
}

// Keeps the sentences at `positions`, in that order, re-indexed from 0.
inline Corpus select(const Corpus& corpus,
                     std::span<const std::size_t> positions) {
  std::vector<Sentence> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(corpus[p]);
  return Corpus(std::move(out));
}

// ---------------------------------------------------------------------------
// Vocabulary

inline constexpr std::string_view kUnkSymbol = "<unk>";

class Vocabulary {
 public:
  using Entry = std::pair<std::string, std::uint64_t>;

  // `entries` must already be ordered by descending frequency.
  Vocabulary(std::vector<Entry> entries, std::size_t size_limit)
      : entries_(std::move(entries)), size_limit_(size_limit) {
    if (size_limit_ == 0) throw ValidationError("size_limit must be >= 1");
    if (entries_.size() > size_limit_) {
      throw ValidationError("vocabulary exceeds its size limit");
    }
    for (const auto& [text, freq] : entries_) {
      if (text == kUnkSymbol) {
        throw ValidationError("vocabulary may not contain <unk>");
      }
      if (!lookup_.emplace(text, freq).second) {
        throw ValidationError("duplicate vocabulary entry '" + text + "'");
      }
    }
  }

  bool contains(std::string_view text) const {
    return lookup_.find(text) != lookup_.end();
  }
  std::uint64_t frequency(std::string_view text) const {
    auto it = lookup_.find(text);
    return it == lookup_.end() ? 0 : it->second;
  }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t size_limit() const noexcept { return size_limit_; }
  static constexpr std::string_view unk_symbol() noexcept { return kUnkSymbol; }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, std::uint64_t, std::less<>> lookup_;
  std::size_t size_limit_;
};

// The `size_limit` most frequent token texts; ties broken by ascending text.
inline Vocabulary build_vocabulary(const Corpus& corpus,
                                   std::size_t size_limit) {
  if (size_limit == 0) throw ValidationError("size_limit must be >= 1");
  if (corpus.empty()) {
    throw ValidationError("cannot build a vocabulary from an empty corpus");
  }
  std::map<std::string_view, std::uint64_t> counts;
  for (const auto& s : corpus) {
    for (const auto& t : s.tokens()) ++counts[t.text()];
  }
  counts.erase(kUnkSymbol);
  std::vector<std::pair<std::string_view, std::uint64_t>> ranked(
      counts.begin(), counts.end());
  // `counts` iterates in ascending text order, so a stable sort on frequency
  // alone yields the lexicographic tie-break.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  if (ranked.size() > size_limit) ranked.resize(size_limit);
  std::vector<Vocabulary::Entry> entries;
  entries.reserve(ranked.size());
  for (const auto& [text, freq] : ranked) entries.emplace_back(text, freq);
  return {std::move(entries), size_limit};
}

// "token<TAB>frequency" per line, descending frequency.
inline void write_vocabulary(std::ostream& out, const Vocabulary& vocab) {
  for (const auto& [text, freq] : vocab.entries()) {
    out << text << '\t' << freq << '\n';
  }
}

inline Vocabulary read_vocabulary(std::istream& in, std::size_t size_limit) {
  std::vector<Vocabulary::Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError("expected token<TAB>frequency", line_no);
    }
    std::uint64_t freq = 0;
    try {
      std::size_t used = 0;
      freq = std::stoull(line.substr(tab + 1), &used);
      if (used != line.size() - tab - 1) throw std::invalid_argument("tail");
    } catch (const std::exception&) {
      throw ParseError("invalid frequency", line_no);
    }
    if (!entries.empty() && freq > entries.back().second) {
      throw ParseError("frequencies must be non-increasing", line_no);
    }
    entries.emplace_back(line.substr(0, tab), freq);
  }
  return {std::move(entries), size_limit};
}

// ---------------------------------------------------------------------------
// Unknown-word filtering

inline double unknown_fraction(const Sentence& sentence,
                               const Vocabulary& vocab) {
  std::size_t unknown = 0;
  for (const auto& t : sentence.tokens()) {
    if (!vocab.contains(t.text())) ++unknown;
  }
  return static_cast<double>(unknown) / static_cast<double>(sentence.size());
}

// Positions of sentences whose unknown fraction does not exceed `threshold`.
inline std::vector<std::size_t> known_positions(const Corpus& corpus,
                                                const Vocabulary& vocab,
                                                double threshold = 0.05) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw ValidationError("unknown-word threshold must lie in [0, 1]");
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    // Compared as unknown > threshold * n so that 1 of 20 at 0.05 sits
    // exactly on the boundary instead of drifting with division rounding.
    const auto& s = corpus[i];
    std::size_t unknown = 0;
    for (const auto& t : s.tokens()) {
      if (!vocab.contains(t.text())) ++unknown;
    }
    const double limit = threshold * static_cast<double>(s.size());
    if (static_cast<double>(unknown) <= limit + 1e-9) keep.push_back(i);
  }
  return keep;
}

// Drops sentences with strictly more than `threshold` unknown tokens.
inline Corpus filter_unknown(const Corpus& corpus, const Vocabulary& vocab,
                             double threshold = 0.05) {
  return select(corpus, known_positions(corpus, vocab, threshold));
}

// ---------------------------------------------------------------------------
// Token-budget subsets

struct SubsetPlan {
  // Original positions of the chosen sentences, in output order.
  std::vector<std::size_t> positions;
  // Set when the corpus holds fewer tokens than the budget.
  std::optional<std::string> warning;
};

// Shuffles sentence order with the seeded Fisher-Yates, then takes the
// longest prefix whose token count fits in `budget`. Sentences are never cut.
inline SubsetPlan plan_subset(const Corpus& corpus, std::uint64_t budget,
                              std::uint64_t seed) {
  if (budget == 0) throw ValidationError("token budget must be >= 1");
  SubsetPlan plan;
  plan.positions.resize(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) plan.positions[i] = i;
  Prng prng = seed_for(seed, corpus.size(), static_cast<std::uint64_t>(
                                                Stream::kSubset));
  fisher_yates(plan.positions, prng);

  if (corpus.token_count() < budget) {
    plan.warning = "corpus has " + std::to_string(corpus.token_count()) +
                   " tokens, fewer than the budget of " +
                   std::to_string(budget) + "; using all sentences";
    return plan;
  }
  std::uint64_t used = 0;
  std::size_t take = 0;
  for (; take < plan.positions.size(); ++take) {
    const auto len = corpus[plan.positions[take]].size();
    if (used + len > budget) break;
    used += len;
  }
  plan.positions.resize(take);
  return plan;
}

struct SubsetResult {
  Corpus corpus;
  std::optional<std::string> warning;
};

inline SubsetResult subset_tokens(const Corpus& corpus, std::uint64_t budget,
                                  std::uint64_t seed) {
  auto plan = plan_subset(corpus, budget, seed);
  return {select(corpus, plan.positions), std::move(plan.warning)};
}

// ---------------------------------------------------------------------------
// Splits

struct SplitSpec {
  double train_fraction = 0.8;
  double valid_fraction = 0.1;
  double test_fraction = 0.1;
  std::uint64_t seed = 0;

  void validate() const {
    for (double f : {train_fraction, valid_fraction, test_fraction}) {
      if (!(f > 0.0 && f < 1.0)) {
        throw ConfigError("split fractions must lie in (0, 1)");
      }
    }
    if (std::abs(train_fraction + valid_fraction + test_fraction - 1.0) >
        1e-9) {
      throw ConfigError("split fractions must sum to 1");
    }
  }
};

struct SplitSizes {
  std::size_t train;
  std::size_t valid;
  std::size_t test;
};

inline SplitSizes split_sizes(std::size_t n, const SplitSpec& spec) {
  spec.validate();
  // The epsilon keeps products like 0.29 * 100 from flooring to 28.
  const auto part = [n](double f) {
    return static_cast<std::size_t>(
        std::floor(f * static_cast<double>(n) + 1e-9));
  };
  SplitSizes sizes{part(spec.train_fraction), part(spec.valid_fraction), 0};
  if (sizes.train + sizes.valid > n) sizes.valid = n - sizes.train;
  sizes.test = n - sizes.train - sizes.valid;
  if (sizes.train == 0 || sizes.valid == 0 || sizes.test == 0) {
    throw ValidationError("split of " + std::to_string(n) +
                          " sentences leaves a partition empty (" +
                          std::to_string(sizes.train) + "/" +
                          std::to_string(sizes.valid) + "/" +
                          std::to_string(sizes.test) + ")");
  }
  return sizes;
}

struct Splits {
  Corpus train;
  Corpus valid;
  Corpus test;
};

inline constexpr std::array<std::string_view, 3> kSplitNames = {"train", "valid",
                                                                "test"};

// Contiguous partition of the (already shuffled) sentence order.
inline Splits split(const Corpus& corpus, const SplitSpec& spec) {
  const auto sizes = split_sizes(corpus.size(), spec);
  const auto& all = corpus.sentences();
  auto range = [&](std::size_t from, std::size_t count) {
    return Corpus(std::vector<Sentence>(all.begin() + from,
                                        all.begin() + from + count));
  };
  return {range(0, sizes.train), range(sizes.train, sizes.valid),
          range(sizes.train + sizes.valid, sizes.test)};
}

// ---------------------------------------------------------------------------
// POS annotations

using VerbTagSet = std::set<std::string, std::less<>>;

inline VerbTagSet default_verb_tags() { return {"VERB"}; }

/// Tags parallel to one sentence.
struct PosAnnotation {
  std::vector<std::string> tags;

  friend bool operator==(const PosAnnotation&, const PosAnnotation&) = default;
};

// Indices of tokens tagged with a member of `verb_tags`, ascending.
inline std::vector<std::size_t> verb_indices(const PosAnnotation& annotation,
                                             const VerbTagSet& verb_tags) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < annotation.tags.size(); ++i) {
    if (verb_tags.count(annotation.tags[i])) out.push_back(i);
  }
  return out;
}

// Parses a tag file parallel to `corpus`: blank lines are skipped exactly as
// parse_corpus skips them, and each remaining line must carry one tag per
// token of the corresponding sentence.
inline std::vector<PosAnnotation> parse_annotations(std::istream& in,
                                                    const Corpus& corpus) {
  std::vector<PosAnnotation> out;
  out.reserve(corpus.size());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::find_invalid_utf8(line) != std::string_view::npos) {
      throw ParseError("invalid UTF-8 byte sequence", line_no);
    }
    auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    if (out.size() >= corpus.size()) {
      throw ParseError("annotation file has more lines than the corpus",
                       line_no);
    }
    const auto& sentence = corpus[out.size()];
    if (fields.size() != sentence.size()) {
      throw ParseError("expected " + std::to_string(sentence.size()) +
                           " tags, found " + std::to_string(fields.size()),
                       line_no);
    }
    PosAnnotation ann;
    ann.tags.assign(fields.begin(), fields.end());
    out.push_back(std::move(ann));
  }
  if (out.size() != corpus.size()) {
    throw ParseError("annotation file ends after " +
                         std::to_string(out.size()) + " of " +
                         std::to_string(corpus.size()) + " sentences",
                     line_no + 1);
  }
  return out;
}

inline std::vector<PosAnnotation> parse_annotations(std::string_view text,
                                                    const Corpus& corpus) {
  std::istringstream in{std::string(text)};
  return parse_annotations(in, corpus);
}

inline void write_annotations(std::ostream& out,
                              std::span<const PosAnnotation> annotations) {
  for (const auto& a : annotations) {
    for (std::size_t i = 0; i < a.tags.size(); ++i) {
      if (i) out << ' ';
      out << a.tags[i];
    }
    out << '\n';
  }
}

template <typename T>
std::vector<T> select(std::span<const T> items,
                      std::span<const std::size_t> positions) {
  std::vector<T> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(items[p]);
  return out;
}

}  // namespace implang
