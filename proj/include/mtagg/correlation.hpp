#ifndef MTAGG_CORRELATION_HPP_
#define MTAGG_CORRELATION_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mtagg/error.hpp"
#include "mtagg/numeric.hpp"
#include "mtagg/report.hpp"

namespace mtagg {

/// System scores keyed by system label. Labels are unique.
class ScoreVector {
 public:
  ScoreVector() = default;

  ScoreVector(std::vector<std::string> labels, std::vector<double> values)
      : labels_(std::move(labels)), values_(std::move(values)) {
    if (labels_.size() != values_.size()) {
      throw Error(ErrorCode::alignment, "score vector has " + std::to_string(labels_.size()) + " labels but " +
                                            std::to_string(values_.size()) + " values");
    }
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], i).second) {
        throw Error(ErrorCode::duplicate, "duplicate label '" + labels_[i] + "' in score vector");
      }
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  [[nodiscard]] bool contains(const std::string& label) const { return index_.count(label) != 0; }

  [[nodiscard]] double at(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw Error(ErrorCode::alignment, "no score for '" + label + "'");
    return values_[it->second];
  }

  /// Values reordered to follow `labels`.
  [[nodiscard]] std::vector<double> aligned_to(std::span<const std::string> labels) const {
    std::vector<double> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(at(l));
    return out;
  }

  /// The scores of the labels present in both vectors, in this vector's order.
  [[nodiscard]] std::vector<std::string> common_labels(const ScoreVector& other) const {
    std::vector<std::string> out;
    for (const auto& l : labels_) {
      if (other.contains(l)) out.push_back(l);
    }
    return out;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<double> values_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Product-moment correlation of paired samples (two-pass, centered sums).
/// Throws degenerate-input when fewer than two pairs are given or either
/// side is constant.
inline double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::alignment, "pearson inputs differ in length");
  if (x.size() < 2) throw Error(ErrorCode::degenerate_input, "pearson needs at least two points");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
  };
  if (constant(x) || constant(y)) throw Error(ErrorCode::degenerate_input, "zero variance");

  const double mx = numeric::mean(x);
  const double my = numeric::mean(y);
  numeric::CompensatedSum sxy, sxx, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  const double denom = std::sqrt(sxx.value() * syy.value());
  if (!(denom > 0.0)) throw Error(ErrorCode::degenerate_input, "zero variance");
  return std::clamp(sxy.value() / denom, -1.0, 1.0);
}

/// Correlation of two score vectors over the same label set, paired by label.
inline double pearson(const ScoreVector& x, const ScoreVector& y) {
  if (x.size() != y.size() || x.common_labels(y).size() != x.size()) {
    throw Error(ErrorCode::alignment, "score vectors cover different systems");
  }
  return pearson(std::span<const double>(x.values()), std::span<const double>(y.aligned_to(x.labels())));
}

enum class CorrelationVariant { pairwise_matrix, per_group_mean, distribution };

constexpr std::string_view to_string(CorrelationVariant v) {
  switch (v) {
    case CorrelationVariant::pairwise_matrix: return "pairwise_matrix";
    case CorrelationVariant::per_group_mean: return "per_group_mean";
    case CorrelationVariant::distribution: return "distribution";
  }
  return "unknown";
}

struct CellFailure {
  std::string row;
  std::string col;
  std::string message;
};

struct GroupCorrelation {
  std::string group;
  double value = 0;
  std::size_t num_systems = 0;
};

/// A named sample of values with its summary. `excluded` counts samples
/// dropped as degenerate; `size` and `pair` identify downsampling cells.
struct NamedDistribution {
  std::string name;
  std::vector<double> values;
  std::optional<BoxplotSummary> summary;
  std::size_t excluded = 0;
  std::size_t size = 0;
  std::string pair;
};

struct CorrelationReport {
  CorrelationVariant variant = CorrelationVariant::pairwise_matrix;
  std::vector<std::string> names;
  std::vector<std::vector<double>> matrix;  // NaN where a cell failed
  std::vector<CellFailure> failures;
  std::vector<GroupCorrelation> groups;
  std::optional<double> mean;
  std::vector<NamedDistribution> distributions;
  std::vector<std::string> warnings;
};

/// Symmetric Pearson matrix with unit diagonal plus a distribution summary
/// of each input vector.
inline CorrelationReport pairwise_matrix(const std::vector<std::pair<std::string, ScoreVector>>& vectors) {
  if (vectors.size() < 2) throw Error(ErrorCode::invalid_parameter, "pairwise matrix needs at least two vectors");
  CorrelationReport report;
  report.variant = CorrelationVariant::pairwise_matrix;
  const std::size_t n = vectors.size();
  report.matrix.assign(n, std::vector<double>(n, std::numeric_limits<double>::quiet_NaN()));
  for (std::size_t i = 0; i < n; ++i) {
    report.names.push_back(vectors[i].first);
    report.matrix[i][i] = 1.0;
    NamedDistribution d{vectors[i].first, vectors[i].second.values(), std::nullopt, 0, 0, {}};
    if (!d.values.empty()) d.summary = summarize(d.values);
    report.distributions.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      try {
        const double r = pearson(vectors[i].second, vectors[j].second);
        report.matrix[i][j] = report.matrix[j][i] = r;
      } catch (const Error& e) {
        report.failures.push_back({vectors[i].first, vectors[j].first, e.what()});
      }
    }
  }
  return report;
}

/// Per-group (language pair) Pearson between metric and human scores over
/// the systems present in both, then the unweighted mean over groups.
/// Groups with fewer than two common systems, or a constant side, are
/// skipped with a warning.
inline CorrelationReport human_correlation(const std::map<std::string, ScoreVector>& metric_scores,
                                           const std::map<std::string, ScoreVector>& human_scores) {
  CorrelationReport report;
  report.variant = CorrelationVariant::per_group_mean;
  std::vector<double> values;
  for (const auto& [group, human] : human_scores) {
    auto it = metric_scores.find(group);
    if (it == metric_scores.end()) {
      report.warnings.push_back(group + ": no metric scores");
      continue;
    }
    const auto common = human.common_labels(it->second);
    if (common.size() < 2) {
      report.warnings.push_back(group + ": " + std::to_string(common.size()) + " common system(s), need 2");
      continue;
    }
    try {
      const double r = pearson(std::span<const double>(it->second.aligned_to(common)),
                               std::span<const double>(human.aligned_to(common)));
      report.groups.push_back({group, r, common.size()});
      report.names.push_back(group);
      values.push_back(r);
    } catch (const Error& e) {
      report.warnings.push_back(group + ": " + e.what());
    }
  }
  for (const auto& [group, _] : metric_scores) {
    if (!human_scores.count(group)) report.warnings.push_back(group + ": no human scores");
  }
  if (!values.empty()) report.mean = numeric::mean(values);
  return report;
}

struct RankedMetric {
  std::string metric;
  double mean = 0;
  std::size_t groups = 0;
};

/// Metrics ordered by descending mean correlation; metrics without a mean
/// are left out. Ties keep name order.
inline std::vector<RankedMetric> rank_by_mean(const std::map<std::string, CorrelationReport>& reports) {
  std::vector<RankedMetric> out;
  for (const auto& [name, rep] : reports) {
    if (rep.mean) out.push_back({name, *rep.mean, rep.groups.size()});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.mean > b.mean; });
  return out;
}

}  // namespace mtagg

#endif  // MTAGG_CORRELATION_HPP_
