#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "mtagg/correlation.hpp"
#include "support/oracles.hpp"

using namespace mtagg;

namespace {

double pearson_v(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(std::span<const double>(x), std::span<const double>(y));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::io;
}

}  // namespace

TEST(Pearson, Examples) {
  EXPECT_NEAR(pearson_v({1, 2, 3}, {2, 4, 6}), 1.0, 1e-12);
  EXPECT_NEAR(pearson_v({1, 2, 3}, {3, 2, 1}), -1.0, 1e-12);
  EXPECT_NEAR(pearson_v({1, 2, 3, 4}, {1, 3, 2, 4}), 0.8, 1e-12);
}

TEST(Pearson, Errors) {
  EXPECT_EQ(code_of([] { pearson_v({1, 1, 1}, {1, 2, 3}); }), ErrorCode::degenerate_input);
  EXPECT_EQ(code_of([] { pearson_v({1, 2, 3}, {5, 5, 5}); }), ErrorCode::degenerate_input);
  EXPECT_EQ(code_of([] { pearson_v({1}, {2}); }), ErrorCode::degenerate_input);
  EXPECT_EQ(code_of([] { pearson_v({1, 2}, {1, 2, 3}); }), ErrorCode::alignment);
  const ScoreVector a({"x", "y"}, {1, 2}), b({"x", "z"}, {1, 2});
  EXPECT_EQ(code_of([&] { pearson(a, b); }), ErrorCode::alignment);
}

TEST(Pearson, AlignsByLabel) {
  const ScoreVector a({"s1", "s2", "s3", "s4"}, {1, 2, 3, 4});
  const ScoreVector b({"s4", "s2", "s3", "s1"}, {4, 3, 2, 1});
  EXPECT_NEAR(pearson(a, b), 0.8, 1e-12);
}

TEST(ScoreVector, RejectsBadInput) {
  EXPECT_EQ(code_of([] { ScoreVector({"a", "a"}, {1, 2}); }), ErrorCode::duplicate);
  EXPECT_EQ(code_of([] { ScoreVector({"a"}, {1, 2}); }), ErrorCode::alignment);
}

TEST(PearsonProperty, AffineInvariance) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0, 1);
  std::uniform_real_distribution<double> coef(0.1, 10.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(2 + t % 30), y(x.size());
    for (auto& v : x) v = g(rng);
    for (auto& v : y) v = g(rng);
    const double a = coef(rng), b = g(rng) * 5;
    std::vector<double> ax(x.size()), nx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      ax[i] = a * x[i] + b;
      nx[i] = -a * x[i] + b;
    }
    EXPECT_NEAR(pearson_v(x, ax), 1.0, 1e-12);
    EXPECT_NEAR(pearson_v(x, nx), -1.0, 1e-12);
    const double r = pearson_v(x, y);
    EXPECT_NEAR(r, pearson_v(y, x), 1e-15);
    EXPECT_NEAR(pearson_v(ax, y), r, 1e-12);
    EXPECT_NEAR(r, oracles::pearson(x, y), 1e-10);
    EXPECT_LE(std::abs(r), 1.0);
  }
}

TEST(PairwiseMatrix, IdenticalAndNegated) {
  const ScoreVector a({"s1", "s2", "s3"}, {0.1, 0.5, 0.3});
  const ScoreVector neg({"s1", "s2", "s3"}, {-0.1, -0.5, -0.3});
  const auto rep = pairwise_matrix({{"a", a}, {"b", a}, {"neg", neg}});
  EXPECT_EQ(rep.variant, CorrelationVariant::pairwise_matrix);
  EXPECT_NEAR(rep.matrix[0][1], 1.0, 1e-12);
  EXPECT_NEAR(rep.matrix[0][2], -1.0, 1e-12);
  ASSERT_EQ(rep.distributions.size(), 3u);
  EXPECT_EQ(rep.distributions[0].summary->count, 3u);
  EXPECT_TRUE(rep.failures.empty());
}

TEST(PairwiseMatrix, RecordsFailingCells) {
  const ScoreVector a({"s1", "s2"}, {1, 2}), flat({"s1", "s2"}, {3, 3}), b({"s1", "s2"}, {2, 1});
  const auto rep = pairwise_matrix({{"a", a}, {"flat", flat}, {"b", b}});
  ASSERT_EQ(rep.failures.size(), 2u);
  EXPECT_EQ(rep.failures[0].row, "a");
  EXPECT_EQ(rep.failures[0].col, "flat");
  EXPECT_TRUE(std::isnan(rep.matrix[0][1]));
  EXPECT_NEAR(rep.matrix[0][2], -1.0, 1e-12);
  EXPECT_THROW(pairwise_matrix({{"a", a}}), Error);
}

TEST(PairwiseMatrixProperty, SymmetricUnitDiagonalPermutationInvariant) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::string> labels;
    for (int i = 0; i < 8; ++i) labels.push_back("sys" + std::to_string(i));
    std::vector<std::pair<std::string, ScoreVector>> vs;
    for (int m = 0; m < 5; ++m) {
      std::vector<double> vals;
      for (int i = 0; i < 8; ++i) vals.push_back(u(rng));
      vs.emplace_back("m" + std::to_string(m), ScoreVector(labels, vals));
    }
    const auto rep = pairwise_matrix(vs);
    // Same vectors with the labels listed in another order.
    std::vector<std::pair<std::string, ScoreVector>> permuted;
    std::vector<std::string> shuffled = labels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (const auto& [name, v] : vs) permuted.emplace_back(name, ScoreVector(shuffled, v.aligned_to(shuffled)));
    const auto rep2 = pairwise_matrix(permuted);
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_EQ(rep.matrix[i][i], 1.0);
      for (std::size_t j = 0; j < 5; ++j) {
        EXPECT_EQ(rep.matrix[i][j], rep.matrix[j][i]);
        EXPECT_NEAR(rep.matrix[i][j], rep2.matrix[i][j], 1e-12);
        EXPECT_LE(std::abs(rep.matrix[i][j]), 1.0);
      }
    }
  }
}

TEST(HumanCorrelation, IdenticalScoresGiveOne) {
  const std::map<std::string, ScoreVector> m{{"en-de", ScoreVector({"a", "b", "c"}, {0.1, 0.2, 0.4})},
                                             {"zh-en", ScoreVector({"a", "b"}, {0.3, 0.9})}};
  const auto rep = human_correlation(m, m);
  ASSERT_TRUE(rep.mean.has_value());
  EXPECT_NEAR(*rep.mean, 1.0, 1e-12);
  EXPECT_EQ(rep.groups.size(), 2u);
}

TEST(HumanCorrelation, UnweightedMeanOverGroups) {
  // Group 1: r = 0.5 (x=[1,2,3], y=[1,3,2]); group 2: r = 1.
  const std::map<std::string, ScoreVector> metric{
      {"g1", ScoreVector({"a", "b", "c"}, {1, 2, 3})},
      {"g2", ScoreVector({"a", "b", "c", "d", "e"}, {1, 2, 3, 4, 5})}};
  const std::map<std::string, ScoreVector> human{
      {"g1", ScoreVector({"a", "b", "c"}, {1, 3, 2})},
      {"g2", ScoreVector({"a", "b", "c", "d", "e"}, {2, 4, 6, 8, 10})}};
  const auto rep = human_correlation(metric, human);
  ASSERT_EQ(rep.groups.size(), 2u);
  EXPECT_NEAR(rep.groups[0].value, 0.5, 1e-12);
  EXPECT_NEAR(*rep.mean, 0.75, 1e-12);
}

TEST(HumanCorrelation, SkipsSmallOrDegenerateGroups) {
  const std::map<std::string, ScoreVector> metric{{"g1", ScoreVector({"a", "b"}, {1, 2})},
                                                  {"g2", ScoreVector({"a", "b"}, {1, 2})},
                                                  {"g3", ScoreVector({"a", "b"}, {1, 1})},
                                                  {"g4", ScoreVector({"a", "b"}, {1, 2})}};
  const std::map<std::string, ScoreVector> human{{"g1", ScoreVector({"a", "z"}, {1, 2})},
                                                 {"g2", ScoreVector({"b", "a"}, {5, 3})},
                                                 {"g3", ScoreVector({"a", "b"}, {1, 2})}};
  const auto rep = human_correlation(metric, human);
  ASSERT_EQ(rep.groups.size(), 1u);
  EXPECT_EQ(rep.groups[0].group, "g2");
  EXPECT_NEAR(*rep.mean, 1.0, 1e-12);
  EXPECT_EQ(rep.warnings.size(), 3u);
}

TEST(HumanCorrelation, NoUsableGroupLeavesMeanEmpty) {
  const std::map<std::string, ScoreVector> m{{"g", ScoreVector({"a"}, {1})}};
  EXPECT_FALSE(human_correlation(m, m).mean.has_value());
}

TEST(RankByMean, OrdersDescending) {
  std::map<std::string, CorrelationReport> reports;
  reports["bleu"].mean = 0.4;
  reports["m-bleu"].mean = 0.8;
  reports["none"];
  const auto ranked = rank_by_mean(reports);
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_EQ(ranked[0].metric, "m-bleu");
  EXPECT_EQ(ranked[1].metric, "bleu");
}
