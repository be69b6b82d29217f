#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mtagg/bleu.hpp"
#include "mtagg/chrf.hpp"
#include "support/golden.hpp"

using namespace mtagg;

namespace {

BleuStats bleu_from_golden(const std::vector<std::uint64_t>& v) {
  BleuStats s = BleuStats::zero(4);
  s.hyp_len = v[0];
  s.ref_len = v[1];
  for (int k = 0; k < 4; ++k) {
    s.clipped_matches[k] = v[2 + k];
    s.hyp_ngrams[k] = v[6 + k];
  }
  return s;
}

ChrfStats chrf_from_golden(const std::vector<std::uint64_t>& v) {
  ChrfStats s = ChrfStats::zero(6);
  for (int k = 0; k < 6; ++k) {
    s.hyp_count[k] = v[3 * k];
    s.ref_count[k] = v[3 * k + 1];
    s.matches[k] = v[3 * k + 2];
  }
  return s;
}

}  // namespace

TEST(BleuStats, ExactMatch) {
  const auto s = bleu_stats(Segment("the cat", "the cat"));
  EXPECT_EQ(s.clipped_matches, (std::vector<std::uint64_t>{2, 1, 0, 0}));
  EXPECT_EQ(s.hyp_ngrams, (std::vector<std::uint64_t>{2, 1, 0, 0}));
  EXPECT_EQ(s.hyp_len, 2u);
  EXPECT_EQ(s.ref_len, 2u);
}

TEST(BleuStats, ClippingRepeatedTokens) {
  const auto s = bleu_stats(Segment("the the the the", "the cat"));
  EXPECT_EQ(s.clipped_matches[0], 1u);  // min(4, 1)
  EXPECT_EQ(s.hyp_ngrams[0], 4u);
}

TEST(BleuStats, EmptyHypothesis) {
  const auto s = bleu_stats(Segment("", "the cat"));
  EXPECT_EQ(s.clipped_matches, (std::vector<std::uint64_t>{0, 0, 0, 0}));
  EXPECT_EQ(s.hyp_ngrams, (std::vector<std::uint64_t>{0, 0, 0, 0}));
  EXPECT_EQ(s.hyp_len, 0u);
  EXPECT_EQ(s.ref_len, 2u);
  EXPECT_EQ(bleu_score(s).value, 0.0);
}

TEST(BleuStats, ClosestReferenceLengthTiesTowardShorter) {
  // hypothesis has 3 tokens; references have 2 and 4 tokens
  const auto s = bleu_stats(Segment("a b c", std::vector<std::string>{"a b c d", "a b"}));
  EXPECT_EQ(s.ref_len, 2u);
  const auto t = bleu_stats(Segment("a b c", std::vector<std::string>{"x y z w v", "a b c d"}));
  EXPECT_EQ(t.ref_len, 4u);
}

TEST(BleuStats, HypNgramInvariant) {
  for (const auto& g : fixtures::load_golden_suite()) {
    const auto s = bleu_stats(Segment(g.hyp, g.ref));
    for (int k = 0; k < 4; ++k) {
      const std::uint64_t n = k + 1;
      EXPECT_EQ(s.hyp_ngrams[k], s.hyp_len >= n ? s.hyp_len - n + 1 : 0);
      EXPECT_LE(s.clipped_matches[k], s.hyp_ngrams[k]);
    }
  }
}

TEST(BleuScore, ExactMatchIsOne) {
  EXPECT_DOUBLE_EQ(bleu_score(bleu_stats(Segment("a b c d e", "a b c d e"))).value, 1.0);
}

TEST(BleuScore, GeometricMeanOfPrecisions) {
  // p = (0.75, 0.5, 0.25, 0.125) with hyp_len == ref_len
  BleuStats s = BleuStats::zero(4);
  s.hyp_len = s.ref_len = 9;
  s.clipped_matches = {6, 4, 2, 1};
  s.hyp_ngrams = {8, 8, 8, 8};
  const double expected = std::pow(0.75 * 0.5 * 0.25 * 0.125, 0.25);
  EXPECT_NEAR(bleu_score(s).value, 0.3291, 1e-4);
  EXPECT_NEAR(bleu_score(s).value, expected, 1e-15);
}

TEST(BleuScore, ExpSmoothingAndBrevityPenalty) {
  BleuStats s = BleuStats::zero(4);
  s.hyp_len = 4;
  s.ref_len = 5;
  s.clipped_matches = {3, 1, 0, 0};
  s.hyp_ngrams = {4, 3, 2, 1};
  const double p3 = 1.0 / (2.0 * 2.0);
  const double p4 = 1.0 / (4.0 * 1.0);
  const double bp = std::exp(1.0 - 5.0 / 4.0);
  const double expected = bp * std::exp((std::log(0.75) + std::log(1.0 / 3.0) + std::log(p3) + std::log(p4)) / 4);
  EXPECT_NEAR(bleu_score(s, Smoothing::exp).value, expected, 1e-15);
  EXPECT_EQ(bleu_score(s, Smoothing::none).value, 0.0);
  ASSERT_TRUE(bleu_score(s).detail);
  EXPECT_NEAR(*bleu_score(s).detail->brevity_penalty, bp, 1e-15);
}

TEST(BleuScore, NoMatchesAtAnyOrderIsZero) {
  EXPECT_EQ(bleu_score(bleu_stats(Segment("x y z w", "a b c d"))).value, 0.0);
}

TEST(BleuScore, MonotoneInMatches) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 500; ++trial) {
    BleuStats s = BleuStats::zero(4);
    s.hyp_len = 4 + gen() % 20;
    s.ref_len = 1 + gen() % 25;
    for (int k = 0; k < 4; ++k) {
      s.hyp_ngrams[k] = s.hyp_len - k;
      s.clipped_matches[k] = gen() % (s.hyp_ngrams[k] + 1);
    }
    const int k = static_cast<int>(gen() % 4);
    if (s.clipped_matches[k] == s.hyp_ngrams[k]) continue;
    BleuStats more = s;
    ++more.clipped_matches[k];
    for (auto sm : {Smoothing::exp, Smoothing::none}) {
      const double a = bleu_score(s, sm).value;
      const double b = bleu_score(more, sm).value;
      EXPECT_GE(b, a);
      EXPECT_GE(a, 0.0);
      EXPECT_LE(b, 1.0);
    }
  }
}

TEST(BleuStats, AdditiveSumIsValid) {
  const auto a = bleu_stats(Segment("the cat sat", "the cat sat down"));
  const auto b = bleu_stats(Segment("a dog", "the dog"));
  const auto sum = a + b;
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(sum.hyp_ngrams[k], a.hyp_ngrams[k] + b.hyp_ngrams[k]);
    EXPECT_LE(sum.clipped_matches[k], sum.hyp_ngrams[k]);
  }
  EXPECT_EQ(sum.hyp_len, 5u);
  EXPECT_EQ(sum.ref_len, 6u);
  EXPECT_THROW(a + BleuStats::zero(3), Error);
}

TEST(BleuGolden, SentenceStatsAndScores) {
  for (const auto& g : fixtures::load_golden_suite()) {
    const Segment seg(g.hyp, g.ref);
    const auto stats = bleu_stats(seg);
    EXPECT_EQ(stats, bleu_from_golden(g.bleu_stats)) << "segment " << g.id;
    EXPECT_NEAR(bleu_score(stats).value, g.sentence_bleu, 1e-12) << "segment " << g.id;
  }
}

TEST(BleuGolden, MultiReference) {
  const auto corpus = fixtures::load_golden_corpus();
  for (const auto& m : corpus.at("multi_reference")) {
    const Segment seg(m.at("hyp").get<std::string>(), m.at("refs").get<std::vector<std::string>>());
    const auto stats = bleu_stats(seg);
    EXPECT_EQ(stats, bleu_from_golden(m.at("bleu_stats").get<std::vector<std::uint64_t>>()));
    EXPECT_NEAR(bleu_score(stats).value, m.at("sentence_bleu").get<double>(), 1e-12);
  }
}

TEST(ChrfStats, Identity) {
  const auto s = chrf_stats(Segment("abc", "abc"));
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(s.matches[k], s.hyp_count[k]);
    EXPECT_EQ(s.matches[k], s.ref_count[k]);
    EXPECT_GT(s.matches[k], 0u);
  }
  EXPECT_DOUBLE_EQ(chrf_score(s).value, 1.0);
}

TEST(ChrfStats, DisjointAlphabets) {
  const auto s = chrf_stats(Segment("aaaa", "bbbb"));
  for (auto m : s.matches) EXPECT_EQ(m, 0u);
  EXPECT_EQ(chrf_score(s).value, 0.0);
}

TEST(ChrfStats, AbcdAgainstAbceMatchesGolden) {
  const auto corpus = fixtures::load_golden_corpus();
  const auto& g = corpus.at("chrf_abcd_abce");
  const auto s = chrf_stats(Segment("abcd", "abce"));
  EXPECT_EQ(s, chrf_from_golden(g.at("stats").get<std::vector<std::uint64_t>>()));
  EXPECT_EQ(s.matches, (std::vector<std::uint64_t>{3, 2, 1, 0, 0, 0}));
  EXPECT_NEAR(chrf_score(s).value, g.at("score").get<double>(), 1e-12);
}

TEST(ChrfScore, SingleOrderFBeta) {
  ChrfStats s = ChrfStats::zero(1);
  s.matches = {2};
  s.hyp_count = {4};  // P = 0.5
  s.ref_count = {2};  // R = 1.0
  EXPECT_NEAR(chrf_score(s, 2.0).value, 5.0 * 0.5 / (4.0 * 0.5 + 1.0), 1e-15);
  EXPECT_NEAR(chrf_score(s, 2.0).value, 0.8333, 1e-4);
  EXPECT_NEAR(chrf_score(s, 2.0, ChrfAveraging::per_order_f).value, 0.8333, 1e-4);
}

TEST(ChrfScore, ZeroMatchesAndUndefinedOrders) {
  ChrfStats s = ChrfStats::zero(6);
  s.hyp_count = {5, 4, 3, 2, 1, 0};
  s.ref_count = {5, 4, 3, 2, 1, 0};
  EXPECT_EQ(chrf_score(s).value, 0.0);
  EXPECT_EQ(chrf_score(ChrfStats::zero(6)).value, 0.0);
}

TEST(ChrfScore, RejectsNonPositiveBeta) {
  try {
    chrf_score(ChrfStats::zero(6), 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_parameter);
  }
  EXPECT_THROW(chrf_score(ChrfStats::zero(6), -1.0), Error);
}

TEST(ChrfScore, AveragingModesDifferOnlyAcrossOrders) {
  ChrfStats s = ChrfStats::zero(2);
  s.matches = {4, 1};
  s.hyp_count = {4, 3};
  s.ref_count = {8, 2};
  // per order: (P, R) = (1, 0.5) and (1/3, 0.5)
  auto f = [](double p, double r) { return 5 * p * r / (4 * p + r); };
  EXPECT_NEAR(chrf_score(s, 2.0, ChrfAveraging::per_order_f).value,
              (f(1.0, 0.5) + f(1.0 / 3.0, 0.5)) / 2.0, 1e-15);
  EXPECT_NEAR(chrf_score(s, 2.0, ChrfAveraging::pooled).value, f(2.0 / 3.0, 0.5), 1e-15);
}

TEST(ChrfGolden, SentenceStatsAndScores) {
  for (const auto& g : fixtures::load_golden_suite()) {
    const auto stats = chrf_stats(Segment(g.hyp, g.ref));
    EXPECT_EQ(stats, chrf_from_golden(g.chrf_stats)) << "segment " << g.id;
    EXPECT_NEAR(chrf_score(stats).value, g.sentence_chrf, 1e-12) << "segment " << g.id;
  }
}

TEST(ChrfGolden, MultiReferencePicksBestReference) {
  const auto corpus = fixtures::load_golden_corpus();
  for (const auto& m : corpus.at("multi_reference")) {
    const Segment seg(m.at("hyp").get<std::string>(), m.at("refs").get<std::vector<std::string>>());
    const auto stats = chrf_stats(seg);
    EXPECT_EQ(stats, chrf_from_golden(m.at("chrf_stats").get<std::vector<std::uint64_t>>()));
    EXPECT_NEAR(chrf_score(stats).value, m.at("sentence_chrf").get<double>(), 1e-12);
  }
}

TEST(Scores, StayInUnitInterval) {
  for (const auto& g : fixtures::load_golden_suite()) {
    const Segment seg(g.hyp, g.ref);
    for (double v : {bleu_score(bleu_stats(seg)).value, chrf_score(chrf_stats(seg)).value,
                     chrf_score(chrf_stats(seg), 0.5, ChrfAveraging::per_order_f).value}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(Signatures, DefaultsMirrorReferenceScorer) {
  EXPECT_EQ(BleuMetric{}.signature(), "nrefs:1|case:mixed|eff:no|tok:13a|smooth:exp");
  EXPECT_EQ(ChrfMetric{}.signature(), "nrefs:1|case:mixed|eff:yes|nc:6|nw:0|space:no");
}
