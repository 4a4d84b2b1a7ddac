// Randomized checks of every perturbation against the reference oracles and
// the structural invariants shared by each variant family.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "implang/perturb.hpp"
#include "reference.hpp"
#include "test_util.hpp"

namespace implang {
namespace {

using testing::random_words;
using testing::sentence_of;
using testing::words;

constexpr int kTrials = 2000;
const std::string kRevText = "<rev>";
const std::string kHopText = "ˌ";
const Token kRev(kRevText);
const Token kHop(kHopText);

std::vector<std::string> sorted(std::vector<std::string> w) {
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<std::string> without(const std::vector<std::string>& w,
                                 const std::string& marker) {
  std::vector<std::string> out;
  for (const auto& x : w) {
    if (x != marker) out.push_back(x);
  }
  return out;
}

class Randomized : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240917};
  std::uniform_int_distribution<std::uint64_t> seeds{0, 1u << 20};
};

TEST_F(Randomized, ShuffleGlobalMatchesOracleAndKeepsMultiset) {
  for (int t = 0; t < kTrials; ++t) {
    const auto w = random_words(rng);
    const auto g = seeds(rng);
    const auto out = words(shuffle_global(sentence_of(w, t), g));
    ASSERT_EQ(out, ref::shuffle_global(w, g));
    ASSERT_EQ(sorted(out), sorted(w));
  }
}

TEST_F(Randomized, ShuffleGlobalDependsOnLengthOnly) {
  for (int t = 0; t < kTrials; ++t) {
    const auto n = 1 + rng() % 12;
    const auto g = seeds(rng);
    std::vector<std::string> a, b;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back("a" + std::to_string(i));
      b.push_back("b" + std::to_string(i));
    }
    const auto pa = words(shuffle_global(sentence_of(a, rng() % 100), g));
    const auto pb = words(shuffle_global(sentence_of(b, rng() % 100), g));
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(pa[i].substr(1), pb[i].substr(1));
    }
  }
}

TEST_F(Randomized, ShuffleLocalMatchesOracleAndIsInvolution) {
  for (int t = 0; t < kTrials; ++t) {
    const auto w = random_words(rng);
    const auto s = sentence_of(w, t);
    const auto out = shuffle_local(s);
    ASSERT_EQ(words(out), ref::shuffle_local(w));
    ASSERT_EQ(shuffle_local(out), s);
  }
}

TEST_F(Randomized, SwitchMatchesOracleAndIsInvolution) {
  for (int t = 0; t < kTrials; ++t) {
    const auto w = random_words(rng);
    const auto s = sentence_of(w, t);
    const auto out = switch_tokens(s);
    ASSERT_EQ(words(out), ref::switch_tokens(w));
    ASSERT_EQ(switch_tokens(out), s);
    if (w.size() >= 3) {
      ASSERT_TRUE(std::equal(w.begin() + 3, w.end(), words(out).begin() + 3));
    }
  }
}

TEST_F(Randomized, RevPositionMatchesOracle) {
  for (int t = 0; t < kTrials; ++t) {
    const auto w = random_words(rng);
    const auto g = seeds(rng);
    const std::size_t index = rng() % 100000;
    const auto pos = draw_rev_position(sentence_of(w, index), g);
    ASSERT_EQ(pos, ref::rev_position(index, w.size(), g));
    ASSERT_LE(pos, w.size());
  }
}

TEST_F(Randomized, ReversalFamilyInvariants) {
  for (int t = 0; t < kTrials; ++t) {
    const auto w = random_words(rng);
    const auto s = sentence_of(w, t);
    const auto pos = draw_rev_position(s, seeds(rng));
    const auto base = words(reverse_baseline(s, pos, kRev));
    const auto part = words(reverse_partial(s, pos, kRev));
    const auto full = words(reverse_full(s, pos, kRev));

    ASSERT_EQ(base, ref::reverse_baseline(w, pos, kRevText));
    ASSERT_EQ(part, ref::reverse_partial(w, pos, kRevText));
    ASSERT_EQ(full, ref::reverse_full(w, pos, kRevText));

    // One marker, one extra token, same multiset otherwise.
    for (const auto* v : {&base, &part, &full}) {
      ASSERT_EQ(v->size(), w.size() + 1);
      ASSERT_EQ(std::count(v->begin(), v->end(), kRevText), 1);
      ASSERT_EQ(sorted(without(*v, kRevText)), sorted(w));
    }
    // Baseline keeps the marker at pos and the original order around it.
    ASSERT_EQ(base[pos], kRevText);
    ASSERT_EQ(without(base, kRevText), w);
    // Partial: prefix intact, suffix reversed.
    ASSERT_TRUE(std::equal(base.begin(), base.begin() + pos + 1, part.begin()));
    auto suffix = std::vector<std::string>(part.begin() + pos + 1, part.end());
    std::reverse(suffix.begin(), suffix.end());
    ASSERT_TRUE(std::equal(suffix.begin(), suffix.end(), w.begin() + pos));
    // Full is the mirror image of baseline.
    auto mirrored = full;
    std::reverse(mirrored.begin(), mirrored.end());
    ASSERT_EQ(mirrored, base);
  }
}

TEST_F(Randomized, HopFamilyInvariants) {
  std::bernoulli_distribution verb(0.3);
  for (int t = 0; t < kTrials; ++t) {
    const auto w = random_words(rng);
    const auto s = sentence_of(w, t);
    PosAnnotation tags;
    std::vector<bool> is_verb;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const bool v = verb(rng);
      is_verb.push_back(v);
      tags.tags.push_back(v ? "VERB" : (i % 2 ? "AUX" : "NOUN"));
    }
    const auto n_verbs = std::count(is_verb.begin(), is_verb.end(), true);

    for (std::size_t offset : {kHopBaselineOffset, kHopOffset}) {
      const auto pos = hop_positions(s, tags, offset);
      ASSERT_EQ(pos.size(), static_cast<std::size_t>(n_verbs));
      ASSERT_TRUE(std::is_sorted(pos.begin(), pos.end()));
      for (auto p : pos) ASSERT_LE(p, w.size());
      const auto out = words(insert_markers(s, pos, kHop));
      ASSERT_EQ(out, ref::hop(w, is_verb, offset, kHopText));
      ASSERT_EQ(std::count(out.begin(), out.end(), kHopText), n_verbs);
      ASSERT_EQ(without(out, kHopText), w);
    }
  }
}

TEST_F(Randomized, HopAndBaselineShareVerbSet) {
  std::bernoulli_distribution verb(0.4);
  for (int t = 0; t < kTrials; ++t) {
    const auto w = random_words(rng);
    std::vector<std::size_t> verbs;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (verb(rng)) verbs.push_back(i);
    }
    const auto hop = hop_positions(w.size(), verbs, kHopOffset);
    const auto base = hop_positions(w.size(), verbs, kHopBaselineOffset);
    ASSERT_EQ(hop.size(), base.size());
    // Each verb's hop marker is never earlier than its baseline marker.
    for (std::size_t i = 0; i < verbs.size(); ++i) {
      ASSERT_GE(hop[i], base[i]);
    }
  }
}

Corpus random_corpus(std::mt19937_64& rng, std::size_t n) {
  std::vector<Sentence> sentences;
  for (std::size_t i = 0; i < n; ++i) {
    sentences.push_back(sentence_of(random_words(rng), i));
  }
  return Corpus(std::move(sentences));
}

TEST_F(Randomized, CorpusLevelVariantsAgreeWithSentenceOracles) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto corpus = random_corpus(rng, 60);
    std::vector<PosAnnotation> tags;
    for (const auto& s : corpus) {
      PosAnnotation a;
      for (std::size_t i = 0; i < s.size(); ++i) {
        a.tags.push_back(rng() % 3 == 0 ? "VERB" : "X");
      }
      tags.push_back(std::move(a));
    }
    const auto g = seeds(rng);
    const auto manifest = build_manifest(corpus, tags, g);
    ApplyOptions opt;
    opt.manifest = &manifest;
    opt.annotations = tags;

    VariantOutputs outs;
    for (auto kind : kAllVariants) {
      outs.corpora.emplace(kind, apply_variant(corpus, make_variant(kind), opt));
    }
    ASSERT_TRUE(check_parity(corpus, outs, kRev, kHop).empty());

    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto w = words(corpus[i]);
      const auto pos = ref::rev_position(i, w.size(), g);
      std::vector<bool> is_verb;
      for (const auto& tag : tags[i].tags) is_verb.push_back(tag == "VERB");
      const std::map<VariantKind, std::vector<std::string>> expected{
          {VariantKind::kNoPerturb, w},
          {VariantKind::kShuffleGlobal, ref::shuffle_global(w, g)},
          {VariantKind::kShuffleLocal, ref::shuffle_local(w)},
          {VariantKind::kSwitch, ref::switch_tokens(w)},
          {VariantKind::kReverseBaseline,
           ref::reverse_baseline(w, pos, kRevText)},
          {VariantKind::kReversePartial,
           ref::reverse_partial(w, pos, kRevText)},
          {VariantKind::kReverseFull, ref::reverse_full(w, pos, kRevText)},
          {VariantKind::kHopBaseline,
           ref::hop(w, is_verb, kHopBaselineOffset, kHopText)},
          {VariantKind::kHop, ref::hop(w, is_verb, kHopOffset, kHopText)},
      };
      for (const auto& [kind, want] : expected) {
        ASSERT_EQ(words(outs.corpora.at(kind)[i]), want)
            << variant_name(kind) << " sentence " << i;
      }
    }
  }
}

TEST_F(Randomized, ManifestRoundTripsThroughJson) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto corpus = random_corpus(rng, 20);
    std::vector<PosAnnotation> tags;
    for (const auto& s : corpus) {
      PosAnnotation a;
      for (std::size_t i = 0; i < s.size(); ++i) {
        a.tags.push_back(rng() % 2 ? "VERB" : "X");
      }
      tags.push_back(std::move(a));
    }
    const auto m = build_manifest(corpus, tags, seeds(rng));
    ASSERT_EQ(manifest_from_json(nlohmann::json::parse(to_json(m).dump())), m);
  }
}

}  // namespace
}  // namespace implang
