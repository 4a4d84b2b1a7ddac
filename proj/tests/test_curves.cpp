#include "implang/curves.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "implang/fixtures.hpp"

namespace implang {
namespace {

LearningCurve make_curve(std::vector<CurvePoint> pts,
                         VariantKind v = VariantKind::kNoPerturb,
                         std::string lang = "x") {
  return {std::move(lang), v, std::move(pts)};
}

std::size_t fixture_index(std::string_view name) {
  for (std::size_t i = 0; i < fixtures::kFixtureVariants.size(); ++i) {
    if (fixtures::kFixtureVariants[i] == name) return i;
  }
  throw std::out_of_range(std::string(name));
}

TEST(ParseCurve, TwoPoints) {
  auto c = parse_curve("step,perplexity\n100,10.0\n200,9.0", "x",
                       VariantKind::kNoPerturb);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.points()[1], (CurvePoint{200, 9.0}));
}

TEST(ParseCurve, NegativePerplexityReportsLine) {
  try {
    parse_curve("step,perplexity\n100,-1\n", "x", VariantKind::kNoPerturb);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseCurve, RejectsBadRows) {
  const char* bad[] = {
      "100,10\n",                                  // no header
      "step,perplexity\n100,10\n100,9\n",          // repeated step
      "step,perplexity\n200,10\n100,9\n",          // decreasing step
      "step,perplexity\n0,10\n",                   // step not positive
      "step,perplexity\n100,inf\n",                // not finite
      "step,perplexity\n100,nan\n",                // not finite
      "step,perplexity\n100\n",                    // one field
      "step,perplexity\n100,1,2\n",                // three fields
      "step,perplexity\n1e2,10\n",                 // step not integer
      "step,perplexity\n100,abc\n",
  };
  for (const char* text : bad) {
    EXPECT_THROW(parse_curve(text, "x", VariantKind::kNoPerturb), ParseError)
        << text;
  }
}

TEST(ParseCurve, WarningsForCrlfAndBlankLines) {
  std::vector<std::string> warnings;
  auto c = parse_curve("step,perplexity\r\n100,10\r\n\n200,9\r\n", "x",
                       VariantKind::kNoPerturb, &warnings);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(warnings.size(), 4u);

  warnings.clear();
  parse_curve("step,perplexity\n100,10\n", "x", VariantKind::kNoPerturb,
              &warnings);
  EXPECT_TRUE(warnings.empty());
}

TEST(ParseCurve, WriteRoundTrip) {
  auto c = make_curve({{100, 12.5}, {200, 11.25}, {400, 9.0}});
  std::ostringstream out;
  write_curve(out, c);
  EXPECT_EQ(out.str(), "step,perplexity\n100,12.50\n200,11.25\n400,9.00\n");
  EXPECT_EQ(parse_curve(out.str(), "x", VariantKind::kNoPerturb).points(),
            c.points());
}

TEST(ParseCurve, DanishFixtureThroughCsv) {
  const auto danish = fixtures::curve(0, fixture_index("no_perturb"));
  std::ostringstream out;
  write_curve(out, danish);
  auto back = parse_curve(out.str(), "danish", VariantKind::kNoPerturb);
  ASSERT_EQ(back.size(), 30u);
  EXPECT_EQ(back.points().front(), (CurvePoint{100, 1021.06}));
  EXPECT_EQ(back.points(), danish.points());
}

TEST(MeanError, Basics) {
  auto b = make_curve({{1, 10}, {2, 8}, {3, 7}});
  auto m = make_curve({{1, 15}, {2, 13}, {3, 12}}, VariantKind::kSwitch);
  EXPECT_DOUBLE_EQ(mean_error(b, b), 0.0);
  EXPECT_DOUBLE_EQ(mean_error(b, m), -5.0);
}

TEST(MeanError, GridMismatchThrows) {
  auto b = make_curve({{1, 10}, {2, 8}});
  auto m = make_curve({{1, 10}, {3, 8}});
  auto shorter = make_curve({{1, 10}});
  EXPECT_THROW(mean_error(b, m), ValidationError);
  EXPECT_THROW(mean_error(b, shorter), ValidationError);
}

TEST(MeanError, DanishSwitchMatchesHandSummation) {
  // Sum over the 30 printed rows of (no_perturb - switch) is 2645.88.
  const auto b = fixtures::curve(0, fixture_index("no_perturb"));
  const auto m = fixtures::curve(0, fixture_index("switch"));
  EXPECT_NEAR(mean_error(b, m), 88.196, 1e-9);
  EXPECT_GT(mean_error(b, m), 0.0);
}

TEST(MinPerplexity, Examples) {
  EXPECT_EQ(min_perplexity(make_curve({{1, 9}, {2, 8}, {3, 7}})),
            (CurvePoint{3, 7}));
  EXPECT_EQ(min_perplexity(make_curve({{1, 9}, {2, 5}, {3, 6}, {4, 5}})),
            (CurvePoint{2, 5}));
  EXPECT_THROW(min_perplexity(make_curve({})), ValidationError);
}

TEST(MinPerplexity, DanishFixture) {
  EXPECT_EQ(min_perplexity(fixtures::curve(0, fixture_index("no_perturb"))),
            (CurvePoint{2900, 767.82}));
}

TEST(Auc, Examples) {
  EXPECT_DOUBLE_EQ(auc(make_curve({{100, 10}, {200, 20}})), 1500.0);
  EXPECT_DOUBLE_EQ(auc(make_curve({{100, 4}, {150, 4}, {700, 4}})), 4.0 * 600);
  EXPECT_THROW(auc(make_curve({{100, 4}})), ValidationError);
}

TEST(Auc, DanishFixtureMatchesIndependentSum) {
  // Straight-line trapezoid sum over the printed column.
  const auto c = fixtures::curve(0, fixture_index("no_perturb"));
  const auto col = fixture_index("no_perturb");
  double expected = 0.0;
  const auto& rows = fixtures::kTables[0];
  for (std::size_t i = 1; i < rows.size(); ++i) {
    expected += 0.5 * double(rows[i].step - rows[i - 1].step) *
                (rows[i].perplexity[col] + rows[i - 1].perplexity[col]);
  }
  EXPECT_DOUBLE_EQ(auc(c), expected);
  EXPECT_NEAR(auc(c), 2386996.0, 1e-6);
}

TEST(Auc, PropertiesOnRandomCurves) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ppl(1.0, 1000.0);
  for (int t = 0; t < 500; ++t) {
    std::vector<CurvePoint> pts;
    std::int64_t step = 0;
    double lo = 1e300, hi = 0;
    for (int i = 0; i < 2 + int(rng() % 20); ++i) {
      step += 1 + std::int64_t(rng() % 50);
      const double v = ppl(rng);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      pts.push_back({step, v});
    }
    const auto c = make_curve(pts);
    const double span = double(pts.back().step - pts.front().step);
    const double a = auc(c);
    ASSERT_GE(a, lo * span * (1 - 1e-12));
    ASSERT_LE(a, hi * span * (1 + 1e-12));
    // Adding a constant shifts the area by constant * span.
    auto shifted = pts;
    for (auto& p : shifted) p.perplexity += 3.0;
    ASSERT_NEAR(auc(make_curve(shifted)), a + 3.0 * span, 1e-6 * a);
    // ME is antisymmetric.
    const auto other = make_curve(shifted, VariantKind::kSwitch);
    ASSERT_NEAR(mean_error(c, other), -mean_error(other, c), 1e-12);
    ASSERT_NEAR(mean_error(c, other), -3.0, 1e-9);
  }
}

TEST(CurveSet, MissingCurveNamesLanguageAndVariant) {
  CurveSet set;
  set.add(make_curve({{1, 2}, {2, 1}}, VariantKind::kNoPerturb, "danish"));
  try {
    pair_all(set);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("danish"), std::string::npos);
  }
  EXPECT_THROW(
      set.add(make_curve({{1, 2}}, VariantKind::kNoPerturb, "danish")),
      ValidationError);
}

TEST(PairAll, FullFixturesGive54Results) {
  const auto set = fixtures::curves();
  EXPECT_EQ(set.size(), 81u);
  const auto pairs = pair_all(set);
  ASSERT_EQ(pairs.size(), 54u);
  EXPECT_EQ(count_expected(pairs), 28u);
  EXPECT_EQ(count_expected(pairs, VariantKind::kShuffleGlobal), 5u);
  EXPECT_EQ(count_expected(pairs, VariantKind::kShuffleLocal), 8u);
  EXPECT_EQ(count_expected(pairs, VariantKind::kSwitch), 2u);
  EXPECT_EQ(count_expected(pairs, VariantKind::kReversePartial), 6u);
  EXPECT_EQ(count_expected(pairs, VariantKind::kReverseFull), 2u);
  EXPECT_EQ(count_expected(pairs, VariantKind::kHop), 5u);
}

TEST(PairAll, BaselinesFollowScheme) {
  for (const auto& r : pair_all(fixtures::curves())) {
    EXPECT_EQ(r.baseline, baseline_of(r.perturbation));
    EXPECT_FALSE(is_baseline(r.perturbation));
    EXPECT_EQ(r.expected_direction, r.mean_error < 0);
  }
}

TEST(PairAll, FragilePairsAreTheTwoGreekOnes) {
  std::vector<std::string> fragile;
  for (const auto& r : pair_all(fixtures::curves())) {
    if (r.fragile) {
      fragile.push_back(r.language + "/" +
                        std::string(variant_name(r.perturbation)));
    }
  }
  EXPECT_EQ(fragile, (std::vector<std::string>{"greek/reverse_full",
                                               "greek/hop"}));
}

TEST(PairAll, SingleLanguageGivesSix) {
  const auto all = fixtures::curves();
  CurveSet one;
  for (auto v : kAllVariants) one.add(all.at("danish", v));
  EXPECT_EQ(pair_all(one).size(), 6u);
}

}  // namespace
}  // namespace implang
