#include "implang/perturb.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_util.hpp"

namespace implang {
namespace {

using testing::words;
using W = std::vector<std::string>;

const Token kRev("<rev>");
const Token kHop("ˌ");

Sentence colorless() {
  return make_sentence({"Colorless", "green", "ideas", "sleep", "furiously."});
}

Sentence sleeping() {
  return make_sentence({"They", "were", "sleeping", "next", "to", "the",
                        "colorless", "green", "ideas."});
}

PosAnnotation sleeping_tags() {
  return {{"PRON", "AUX", "VERB", "ADP", "ADP", "DET", "ADJ", "ADJ", "NOUN"}};
}

// Reference rows, token for token. Capitalization in the reference rows is
// typographic; tokens move unchanged.

TEST(Golden, ShuffleLocal) {
  EXPECT_EQ(words(shuffle_local(colorless())),
            (W{"green", "Colorless", "sleep", "ideas", "furiously."}));
}

TEST(Golden, Switch) {
  EXPECT_EQ(words(switch_tokens(colorless())),
            (W{"ideas", "green", "Colorless", "sleep", "furiously."}));
}

TEST(Golden, ReverseBaseline) {
  EXPECT_EQ(words(reverse_baseline(colorless(), 2, kRev)),
            (W{"Colorless", "green", "<rev>", "ideas", "sleep", "furiously."}));
}

TEST(Golden, ReversePartial) {
  EXPECT_EQ(words(reverse_partial(colorless(), 2, kRev)),
            (W{"Colorless", "green", "<rev>", "furiously.", "sleep", "ideas"}));
}

TEST(Golden, ReverseFull) {
  EXPECT_EQ(words(reverse_full(colorless(), 2, kRev)),
            (W{"furiously.", "sleep", "ideas", "<rev>", "green", "Colorless"}));
}

TEST(Golden, HopPositions) {
  EXPECT_EQ(hop_positions(sleeping(), sleeping_tags(), kHopOffset),
            std::vector<std::size_t>{6});
  EXPECT_EQ(hop_positions(sleeping(), sleeping_tags(), kHopBaselineOffset),
            std::vector<std::size_t>{3});
}

TEST(Golden, Hop) {
  auto pos = hop_positions(sleeping(), sleeping_tags(), kHopOffset);
  EXPECT_EQ(words(insert_markers(sleeping(), pos, kHop)),
            (W{"They", "were", "sleeping", "next", "to", "the", "ˌ",
               "colorless", "green", "ideas."}));
}

TEST(Golden, HopBaseline) {
  auto pos = hop_positions(sleeping(), sleeping_tags(), kHopBaselineOffset);
  EXPECT_EQ(words(insert_markers(sleeping(), pos, kHop)),
            (W{"They", "were", "sleeping", "ˌ", "next", "to", "the",
               "colorless", "green", "ideas."}));
}

TEST(ShuffleGlobal, SingleTokenUnchanged) {
  auto s = make_sentence({"x"});
  EXPECT_EQ(shuffle_global(s, 123), s);
}

TEST(ShuffleGlobal, FrozenPermutations) {
  // Values from an independent Python evaluation of the generator.
  EXPECT_EQ(words(shuffle_global(make_sentence({"0", "1", "2", "3", "4"}), 0)),
            (W{"4", "1", "2", "3", "0"}));
  EXPECT_EQ(words(shuffle_global(
                make_sentence({"0", "1", "2", "3", "4", "5", "6"}), 42)),
            (W{"5", "6", "2", "0", "4", "3", "1"}));
}

TEST(ShuffleGlobal, SameLengthSamePermutation) {
  auto a = make_sentence({"a", "b", "c", "d", "e", "f", "g"}, 0);
  auto b = make_sentence({"t", "u", "v", "w", "x", "y", "z"}, 5);
  auto pa = words(shuffle_global(a, 9));
  auto pb = words(shuffle_global(b, 9));
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(pa[i][0] - 'a', pb[i][0] - 't');
  }
}

TEST(ShuffleGlobal, PreservesMultiset) {
  auto s = make_sentence({"a", "b", "a", "c", "b"});
  auto out = words(shuffle_global(s, 31));
  auto in = words(s);
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  EXPECT_EQ(out, in);
}

TEST(ShuffleLocal, OddLengthKeepsTrailingToken) {
  EXPECT_EQ(words(shuffle_local(make_sentence({"a", "b", "c"}))),
            (W{"b", "a", "c"}));
  auto one = make_sentence({"a"});
  EXPECT_EQ(shuffle_local(one), one);
}

TEST(ShuffleLocal, Involution) {
  EXPECT_EQ(shuffle_local(shuffle_local(colorless())), colorless());
}

TEST(Switch, ShortSentenceIsIdentity) {
  auto s = make_sentence({"a", "b"});
  EXPECT_EQ(switch_tokens(s), s);
  EXPECT_EQ(switch_tokens(switch_tokens(colorless())), colorless());
}

TEST(RevPosition, RangeAndDeterminism) {
  auto s = make_sentence({"x"}, 4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto p = draw_rev_position(s, seed);
    EXPECT_LE(p, 1u);
    EXPECT_EQ(p, draw_rev_position(s, seed));
  }
}

TEST(RevPosition, FrozenValues) {
  // Python evaluation for seed 0, length 5, indices 0..5.
  const std::vector<std::size_t> expected{3, 4, 4, 2, 5, 1};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    auto s = make_sentence({"a", "b", "c", "d", "e"}, i);
    EXPECT_EQ(draw_rev_position(s, 0), expected[i]) << "index " << i;
  }
}

TEST(RevPosition, CoversAllPositionsForLengthNine) {
  std::vector<int> seen(10, 0);
  const auto words9 = W{"a", "b", "c", "d", "e", "f", "g", "h", "i"};
  for (std::size_t idx = 0; idx < 10000; ++idx) {
    ++seen.at(draw_rev_position(testing::sentence_of(words9, idx), 77));
  }
  for (int count : seen) {
    EXPECT_GT(count, 800);  // ~1000 expected per position
    EXPECT_LT(count, 1200);
  }
}

TEST(Reverse, EndpointPositions) {
  auto s = colorless();
  EXPECT_EQ(words(reverse_baseline(s, 0, kRev))[0], "<rev>");
  EXPECT_EQ(reverse_partial(s, 5, kRev), reverse_baseline(s, 5, kRev));
  EXPECT_EQ(words(reverse_partial(s, 0, kRev)),
            (W{"<rev>", "furiously.", "sleep", "ideas", "green", "Colorless"}));
  EXPECT_EQ(reverse_baseline(s, 3, kRev).size(), s.size() + 1);
}

TEST(Reverse, DoubleReversalOfFullIsBaseline) {
  auto full = words(reverse_full(colorless(), 3, kRev));
  std::reverse(full.begin(), full.end());
  EXPECT_EQ(full, words(reverse_baseline(colorless(), 3, kRev)));
}

TEST(Reverse, OutOfRangePositionThrows) {
  EXPECT_THROW(reverse_baseline(colorless(), 6, kRev), ValidationError);
  EXPECT_THROW(reverse_partial(colorless(), 6, kRev), ValidationError);
  EXPECT_THROW(reverse_full(colorless(), 6, kRev), ValidationError);
}

TEST(HopPositions, ClampedToSentenceEnd) {
  auto s = make_sentence({"a", "b", "go"});
  PosAnnotation tags{{"X", "X", "VERB"}};
  EXPECT_EQ(hop_positions(s, tags, kHopOffset), std::vector<std::size_t>{3});
}

TEST(HopPositions, WindowsUseOriginalIndicesAndMayCoincide) {
  // Verbs at 0 and 1 with offset 4 in a 3-token sentence both clamp to 3.
  auto s = make_sentence({"go", "run", "x"});
  PosAnnotation tags{{"VERB", "VERB", "NOUN"}};
  auto pos = hop_positions(s, tags, kHopOffset);
  EXPECT_EQ(pos, (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(words(insert_markers(s, pos, kHop)),
            (W{"go", "run", "x", "ˌ", "ˌ"}));
}

TEST(HopPositions, LengthMismatchThrows) {
  EXPECT_THROW(hop_positions(colorless(), PosAnnotation{{"VERB"}}, 4),
               ValidationError);
}

TEST(InsertMarkers, Basics) {
  auto s = make_sentence({"a", "b"});
  EXPECT_EQ(insert_markers(s, {}, kHop), s);
  const std::vector<std::size_t> zeros{0, 0};
  EXPECT_EQ(words(insert_markers(s, zeros, kHop)), (W{"ˌ", "ˌ", "a", "b"}));
  const std::vector<std::size_t> unsorted{1, 0};
  EXPECT_THROW(insert_markers(s, unsorted, kHop), ValidationError);
  const std::vector<std::size_t> beyond{3};
  EXPECT_THROW(insert_markers(s, beyond, kHop), ValidationError);
}

TEST(InsertMarkers, StripRecoversOriginal) {
  auto s = colorless();
  const std::vector<std::size_t> pos{0, 2, 2, 5};
  EXPECT_EQ(strip_markers(insert_markers(s, pos, kHop), kHop), s.tokens());
}

TEST(VariantNames, RoundTripAndAliases) {
  for (auto kind : kAllVariants) {
    EXPECT_EQ(parse_variant(variant_name(kind)), kind);
  }
  EXPECT_EQ(parse_variant("NO PERTURB"), VariantKind::kNoPerturb);
  EXPECT_EQ(parse_variant("Reverse-Full"), VariantKind::kReverseFull);
  EXPECT_FALSE(parse_variant("mirror").has_value());
  EXPECT_THROW(variant_from_name("mirror"), ConfigError);
}

TEST(VariantNames, BaselineMapping) {
  EXPECT_EQ(baseline_of(VariantKind::kSwitch), VariantKind::kNoPerturb);
  EXPECT_EQ(baseline_of(VariantKind::kReversePartial),
            VariantKind::kReverseBaseline);
  EXPECT_EQ(baseline_of(VariantKind::kHop), VariantKind::kHopBaseline);
}

TEST(PerturbationVariant, MarkerPresenceMatchesKind) {
  EXPECT_THROW((PerturbationVariant{VariantKind::kHop, std::nullopt}.validate()),
               ConfigError);
  EXPECT_THROW(
      (PerturbationVariant{VariantKind::kSwitch, Token("x")}.validate()),
      ConfigError);
  EXPECT_NO_THROW(make_variant(VariantKind::kReverseFull).validate());
}

Corpus toy_corpus() {
  return parse_corpus(
      "They were sleeping next to the colorless green ideas.\n"
      "Colorless green ideas sleep furiously.\n"
      "Go\n");
}

std::vector<PosAnnotation> toy_tags(const Corpus& c) {
  return parse_annotations(
      "PRON AUX VERB ADP ADP DET ADJ ADJ NOUN\n"
      "ADJ ADJ NOUN VERB ADV\n"
      "VERB\n",
      c);
}

TEST(ApplyVariant, NoPerturbIsIdentity) {
  auto c = toy_corpus();
  EXPECT_EQ(to_text(apply_variant(c, make_variant(VariantKind::kNoPerturb))),
            to_text(c));
}

TEST(ApplyVariant, ReversePartialMatchesBaselineLengths) {
  auto c = toy_corpus();
  auto manifest = build_manifest(c, {}, 5);
  ApplyOptions opt;
  opt.manifest = &manifest;
  auto base = apply_variant(c, make_variant(VariantKind::kReverseBaseline), opt);
  auto part = apply_variant(c, make_variant(VariantKind::kReversePartial), opt);
  ASSERT_EQ(base.size(), part.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(base[i].size(), part[i].size());
    EXPECT_EQ(base[i].size(), c[i].size() + 1);
    EXPECT_EQ(base[i][manifest.at(i).rev_position], kRev);
  }
}

TEST(ApplyVariant, DeterministicAcrossRuns) {
  auto c = toy_corpus();
  auto tags = toy_tags(c);
  for (auto kind : kAllVariants) {
    auto m1 = build_manifest(c, tags, 11);
    auto m2 = build_manifest(c, tags, 11);
    ApplyOptions o1, o2;
    o1.manifest = &m1;
    o1.annotations = tags;
    o2.manifest = &m2;
    o2.annotations = tags;
    EXPECT_EQ(to_text(apply_variant(c, make_variant(kind), o1)),
              to_text(apply_variant(c, make_variant(kind), o2)))
        << variant_name(kind);
  }
}

TEST(ApplyVariant, HopUsesManifestAndAnnotations) {
  auto c = toy_corpus();
  auto tags = toy_tags(c);
  auto manifest = build_manifest(c, tags, 1);
  ApplyOptions opt;
  opt.manifest = &manifest;
  opt.annotations = tags;
  auto hop = apply_variant(c, make_variant(VariantKind::kHop), opt);
  EXPECT_EQ(hop[0].joined(),
            "They were sleeping next to the ˌ colorless green ideas.");
  EXPECT_EQ(hop[1].joined(), "Colorless green ideas sleep furiously. ˌ");
  EXPECT_EQ(hop[2].joined(), "Go ˌ");
}

TEST(ApplyVariant, MissingInputsAreConfigErrors) {
  auto c = toy_corpus();
  EXPECT_THROW(apply_variant(c, make_variant(VariantKind::kReverseFull)),
               ConfigError);
  auto manifest = build_manifest(c, {}, 1);
  ApplyOptions opt;
  opt.manifest = &manifest;
  EXPECT_THROW(apply_variant(c, make_variant(VariantKind::kHop), opt),
               ConfigError);
}

TEST(ApplyVariant, MarkerAlreadyInCorpusIsValidationError) {
  auto c = parse_corpus("a <rev> b\n");
  auto manifest = build_manifest(c, {}, 1);
  ApplyOptions opt;
  opt.manifest = &manifest;
  EXPECT_THROW(
      apply_variant(c, make_variant(VariantKind::kReverseBaseline), opt),
      ValidationError);
}

TEST(ApplyVariant, ManifestDisagreeingWithTagsIsRejected) {
  auto c = toy_corpus();
  auto tags = toy_tags(c);
  auto manifest = build_manifest(c, tags, 1);
  manifest.entries[0].verb_positions = {1};
  ApplyOptions opt;
  opt.manifest = &manifest;
  opt.annotations = tags;
  EXPECT_THROW(apply_variant(c, make_variant(VariantKind::kHop), opt),
               ValidationError);
}

TEST(Manifest, JsonRoundTripAndShape) {
  auto c = toy_corpus();
  auto m = build_manifest(c, toy_tags(c), 99);
  auto j = to_json(m);
  EXPECT_EQ(j.at("global_seed").get<std::uint64_t>(), 99u);
  EXPECT_EQ(j.at("entries").at("0").at("verb_positions"),
            nlohmann::json::array({2}));
  EXPECT_EQ(manifest_from_json(nlohmann::json::parse(j.dump())), m);
}

TEST(Manifest, RejectsMalformedJson) {
  EXPECT_THROW(manifest_from_json(nlohmann::json::parse(R"({"entries":{}})")),
               ValidationError);
  EXPECT_THROW(manifest_from_json(nlohmann::json::parse(
                   R"({"global_seed":1,"entries":{},"extra":0})")),
               ValidationError);
  EXPECT_THROW(manifest_from_json(nlohmann::json::parse(
                   R"({"global_seed":1,"entries":{"x":{}}})")),
               ValidationError);
}

TEST(Manifest, PureFunctionOfInputs) {
  auto c = toy_corpus();
  EXPECT_EQ(build_manifest(c, toy_tags(c), 3), build_manifest(c, toy_tags(c), 3));
  EXPECT_NE(build_manifest(c, {}, 3), build_manifest(c, {}, 4));
}

TEST(CheckParity, CleanOutputsHaveNoViolations) {
  auto c = toy_corpus();
  auto tags = toy_tags(c);
  auto manifest = build_manifest(c, tags, 8);
  ApplyOptions opt;
  opt.manifest = &manifest;
  opt.annotations = tags;
  VariantOutputs outs;
  for (auto kind : kAllVariants) {
    outs.corpora.emplace(kind, apply_variant(c, make_variant(kind), opt));
  }
  EXPECT_TRUE(check_parity(c, outs, kRev, kHop).empty());

  // Corrupt one sentence of reverse_full.
  auto broken = outs;
  std::vector<Sentence> s(broken.corpora.at(VariantKind::kReverseFull).begin(),
                          broken.corpora.at(VariantKind::kReverseFull).end());
  s[1] = make_sentence({"<rev>", "x"}, 1);
  broken.corpora.at(VariantKind::kReverseFull) = Corpus(s);
  EXPECT_FALSE(check_parity(c, broken, kRev, kHop).empty());
}

}  // namespace
}  // namespace implang
