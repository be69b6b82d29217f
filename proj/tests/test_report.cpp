#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "mtagg/format.hpp"
#include "mtagg/report.hpp"

using namespace mtagg;

TEST(Summary, Quartiles) {
  const std::vector<double> v{4, 1, 3, 2};
  const auto s = summarize(v);
  EXPECT_EQ(s.min, 1);
  EXPECT_DOUBLE_EQ(s.q1, 1.75);
  EXPECT_DOUBLE_EQ(s.median, 2.5);
  EXPECT_DOUBLE_EQ(s.q3, 3.25);
  EXPECT_EQ(s.max, 4);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_EQ(s.count, 4u);
}

TEST(Summary, SingleValueAndEmpty) {
  const std::vector<double> one{0.3};
  const auto s = summarize(one);
  EXPECT_EQ(s.q1, 0.3);
  EXPECT_EQ(s.q3, 0.3);
  EXPECT_THROW(summarize(std::vector<double>{}), Error);
}

TEST(SummaryProperty, OrderedAndBounded) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> v(1 + t % 40);
    for (auto& x : v) x = u(rng);
    const auto s = summarize(v);
    EXPECT_LE(s.min, s.q1);
    EXPECT_LE(s.q1, s.median);
    EXPECT_LE(s.median, s.q3);
    EXPECT_LE(s.q3, s.max);
    EXPECT_GE(s.mean, s.min);
    EXPECT_LE(s.mean, s.max);
  }
}

TEST(Histogram, CountsEveryScoreOnce) {
  const std::vector<double> scores{0.0, 0.05, 0.1, 0.5, 0.99, 1.0};
  const auto h = emit_histogram(scores, 10);
  EXPECT_EQ(h.kind, PlotKind::histogram);
  EXPECT_EQ(h.rows(), 10u);
  const auto& c = h.column("count").values;
  EXPECT_EQ(c[0], 2);
  EXPECT_EQ(c[1], 1);
  EXPECT_EQ(c[5], 1);
  EXPECT_EQ(c[9], 2);
  double total = 0;
  for (double x : c) total += x;
  EXPECT_EQ(total, 6);
  EXPECT_EQ(h.column("bin_hi").values.back(), 1.0);
}

TEST(Summary, FiveValues) {
  const auto s = summarize(std::vector<double>{1, 2, 3, 4, 5});
  EXPECT_EQ(s.min, 1);
  EXPECT_EQ(s.q1, 2);
  EXPECT_EQ(s.median, 3);
  EXPECT_EQ(s.q3, 4);
  EXPECT_EQ(s.max, 5);
}

TEST(Boxplot, SingleValueFillsEveryStatistic) {
  const auto d = emit_boxplot_summary(std::vector<double>{0.7});
  for (const char* name : {"min", "q1", "median", "q3", "max"}) EXPECT_EQ(d.column(name).values[0], 0.7) << name;
  EXPECT_THROW(emit_boxplot_summary(std::vector<double>{}), Error);
}

TEST(BoxplotProperty, AddingValueAboveMaxNeverLowersAStatistic) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> v(1 + t % 30);
    for (auto& x : v) x = u(rng);
    const auto before = summarize(v);
    v.push_back(before.max + u(rng) + 1e-9);
    const auto after = summarize(v);
    EXPECT_GE(after.min, before.min);
    EXPECT_GE(after.q1, before.q1);
    EXPECT_GE(after.median, before.median);
    EXPECT_GE(after.q3, before.q3);
    EXPECT_GT(after.max, before.max);
  }
}

TEST(Histogram, EqualScoresFillOneBin) {
  const std::vector<double> scores(37, 0.5);
  const auto h = emit_histogram(scores, 10);
  const auto& c = h.column("count").values;
  EXPECT_EQ(std::count_if(c.begin(), c.end(), [](double x) { return x > 0; }), 1);
  EXPECT_EQ(c[5], 37);
}

TEST(Histogram, UniformGridIsFlat) {
  std::vector<double> scores;
  for (int i = 0; i < 100; ++i) scores.push_back((i + 0.5) / 100.0);
  const auto h = emit_histogram(scores, 20);
  const auto& c = h.column("count").values;
  for (double x : c) EXPECT_EQ(x, 5);
}

TEST(HistogramProperty, PermutationInvariant) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> v(1 + t * 3);
    for (auto& x : v) x = u(rng);
    const auto a = emit_histogram(v, 7).column("count").values;
    std::shuffle(v.begin(), v.end(), rng);
    EXPECT_EQ(emit_histogram(v, 7).column("count").values, a);
  }
}

TEST(Histogram, RejectsBadInput) {
  EXPECT_THROW(emit_histogram(std::vector<double>{1.5}, 10), Error);
  EXPECT_THROW(emit_histogram(std::vector<double>{}, 10), Error);
  EXPECT_THROW(emit_histogram(std::vector<double>{0.5}, 0), Error);
  EXPECT_THROW(emit_histogram(std::vector<double>{0.5}, 4, "s", 1.0, 1.0), Error);
}

TEST(Boxplot, OneRowOfSummaryColumns) {
  const auto d = emit_boxplot_summary(std::vector<double>{1, 2, 3, 4}, "N=10");
  EXPECT_EQ(d.rows(), 1u);
  EXPECT_EQ(d.row_labels, std::vector<std::string>{"N=10"});
  EXPECT_DOUBLE_EQ(d.column("q1").values[0], 1.75);
  std::ostringstream out;
  d.write_csv(out);
  EXPECT_EQ(out.str(), "label,min,q1,median,q3,max,mean,count\nN=10,1,1.75,2.5,3.25,4,2.5,4\n");
}

TEST(Scatter, LabelsAndQuoting) {
  const auto d = emit_scatter({"sys,a", "b"}, {0.1, 0.2}, {0.3, 0.4}, "bleu", "chrf");
  std::ostringstream out;
  d.write_csv(out);
  EXPECT_EQ(out.str(), "label,bleu,chrf\n\"sys,a\",0.1,0.3\nb,0.2,0.4\n");
  EXPECT_THROW(emit_scatter({"a"}, {0.1, 0.2}, {0.3, 0.4}, "x", "y"), Error);
}

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(fmt::number(0.1), "0.1");
  EXPECT_EQ(fmt::number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(fmt::number(0.0), "0");
  EXPECT_EQ(fmt::parse_number(" 0.25 "), 0.25);
  EXPECT_EQ(fmt::parse_number("1e-3"), 0.001);
  EXPECT_THROW(fmt::parse_number("0,5"), Error);
  EXPECT_THROW(fmt::parse_number(""), Error);
  EXPECT_THROW(fmt::parse_number("abc"), Error);
}
