#ifndef MTAGG_REPORT_HPP_
#define MTAGG_REPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtagg/error.hpp"
#include "mtagg/format.hpp"
#include "mtagg/numeric.hpp"

namespace mtagg {

/// Quantile of already-sorted data, linear interpolation between order
/// statistics: h = (n - 1) q, x[floor h] + (h - floor h)(x[floor h + 1] - x[floor h]).
inline double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw Error(ErrorCode::empty_evaluation, "quantile of an empty sequence");
  if (q <= 0.0) return sorted.front();
  if (q >= 1.0) return sorted.back();
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= sorted.size() || frac == 0.0) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

struct BoxplotSummary {
  double min = 0;
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  double max = 0;
  double mean = 0;
  std::size_t count = 0;
};

inline BoxplotSummary summarize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::empty_evaluation, "cannot summarize an empty distribution");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return BoxplotSummary{sorted.front(),
                        quantile_sorted(sorted, 0.25),
                        quantile_sorted(sorted, 0.5),
                        quantile_sorted(sorted, 0.75),
                        sorted.back(),
                        numeric::mean(sorted),
                        sorted.size()};
}

enum class PlotKind { histogram, scatter, boxplot };

constexpr std::string_view to_string(PlotKind k) {
  switch (k) {
    case PlotKind::histogram: return "histogram";
    case PlotKind::scatter: return "scatter";
    case PlotKind::boxplot: return "boxplot";
  }
  return "unknown";
}

struct HistogramBinning {
  std::size_t bins = 10;
  double lo = 0.0;
  double hi = 1.0;
};

struct Column {
  std::string name;
  std::vector<double> values;
};

/// Tabular data behind one figure. Every column has one value per row;
/// `row_labels`, when present, names each row (a system, a series).
struct PlotDataset {
  PlotKind kind = PlotKind::histogram;
  std::vector<std::string> series;
  std::vector<std::string> row_labels;
  std::vector<Column> columns;
  std::optional<HistogramBinning> binning;

  [[nodiscard]] std::size_t rows() const { return columns.empty() ? 0 : columns.front().values.size(); }

  [[nodiscard]] const Column& column(std::string_view name) const {
    for (const auto& c : columns) {
      if (c.name == name) return c;
    }
    throw Error(ErrorCode::invalid_parameter, "no column '" + std::string(name) + "'");
  }

  /// CSV with a header row; a leading `label` column when rows are labelled.
  void write_csv(std::ostream& out) const {
    const bool labelled = !row_labels.empty();
    bool first = true;
    if (labelled) {
      out << "label";
      first = false;
    }
    for (const auto& c : columns) {
      out << (first ? "" : ",") << c.name;
      first = false;
    }
    out << '\n';
    for (std::size_t r = 0; r < rows(); ++r) {
      first = true;
      if (labelled) {
        out << csv_field(row_labels[r]);
        first = false;
      }
      for (const auto& c : columns) {
        out << (first ? "" : ",") << fmt::number(c.values[r]);
        first = false;
      }
      out << '\n';
    }
  }

  static std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  }
};

/// Equal-width histogram over [lo, hi]; a value equal to hi lands in the
/// last bin. Values outside the range are rejected so the counts always sum
/// to the number of inputs.
inline PlotDataset emit_histogram(std::span<const double> scores, std::size_t bins,
                                  std::string series = "scores", double lo = 0.0, double hi = 1.0) {
  if (scores.empty()) throw Error(ErrorCode::empty_evaluation, "histogram of no scores");
  if (bins < 1) throw Error(ErrorCode::invalid_parameter, "histogram needs at least one bin");
  if (!(hi > lo)) throw Error(ErrorCode::invalid_parameter, "histogram range is empty");

  std::vector<double> counts(bins, 0.0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (double x : scores) {
    if (!(x >= lo && x <= hi)) {
      throw Error(ErrorCode::invalid_parameter, "score " + fmt::number(x) + " outside histogram range");
    }
    auto b = static_cast<std::size_t>((x - lo) / width);
    counts[std::min(b, bins - 1)] += 1.0;
  }
  PlotDataset out;
  out.kind = PlotKind::histogram;
  out.series = {std::move(series)};
  out.binning = HistogramBinning{bins, lo, hi};
  Column left{"bin_lo", {}}, right{"bin_hi", {}};
  for (std::size_t b = 0; b < bins; ++b) {
    left.values.push_back(lo + width * static_cast<double>(b));
    right.values.push_back(b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1));
  }
  out.columns = {std::move(left), std::move(right), Column{"count", std::move(counts)}};
  return out;
}

/// Five-number summary (plus mean and count) of one distribution.
inline PlotDataset emit_boxplot_summary(std::span<const double> distribution, std::string series = "values") {
  const BoxplotSummary s = summarize(distribution);
  PlotDataset out;
  out.kind = PlotKind::boxplot;
  out.series = {series};
  out.row_labels = {std::move(series)};
  out.columns = {{"min", {s.min}},   {"q1", {s.q1}},     {"median", {s.median}}, {"q3", {s.q3}},
                 {"max", {s.max}},   {"mean", {s.mean}}, {"count", {static_cast<double>(s.count)}}};
  return out;
}

/// Paired (x, y) points, one row per label.
inline PlotDataset emit_scatter(std::vector<std::string> labels, std::vector<double> x, std::vector<double> y,
                                std::string x_name, std::string y_name) {
  if (labels.size() != x.size() || x.size() != y.size()) {
    throw Error(ErrorCode::alignment, "scatter columns differ in length");
  }
  PlotDataset out;
  out.kind = PlotKind::scatter;
  out.series = {x_name, y_name};
  out.row_labels = std::move(labels);
  out.columns = {{std::move(x_name), std::move(x)}, {std::move(y_name), std::move(y)}};
  return out;
}

}  // namespace mtagg

#endif  // MTAGG_REPORT_HPP_
