#ifndef MTAGG_SCORE_HPP_
#define MTAGG_SCORE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtagg/error.hpp"

namespace mtagg {

enum class MetricId { bleu, chrf };

constexpr std::string_view to_string(MetricId id) {
  return id == MetricId::bleu ? "bleu" : "chrf";
}

inline MetricId parse_metric_id(std::string_view s) {
  if (s == "bleu") return MetricId::bleu;
  if (s == "chrf") return MetricId::chrf;
  throw Error(ErrorCode::invalid_parameter, "unknown metric '" + std::string(s) + "'");
}

struct ScoreDetail {
  std::vector<double> precisions;  // per order, 1-based order at index 0
  std::vector<double> recalls;     // chrF only
  std::optional<double> brevity_penalty;  // BLEU only
};

/// A metric value on the unit interval.
struct Score {
  double value = 0.0;
  MetricId metric = MetricId::bleu;
  std::optional<ScoreDetail> detail;
};

}  // namespace mtagg

#endif  // MTAGG_SCORE_HPP_
