#ifndef MTAGG_EVALUATION_SET_HPP_
#define MTAGG_EVALUATION_SET_HPP_

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "mtagg/error.hpp"
#include "mtagg/segment.hpp"

namespace mtagg {

/// Grouping key of one system evaluation.
struct EvaluationKey {
  std::string dataset_type;
  std::string dataset;
  std::string lang_pair;
  std::string system;

  /// "dataset_type/dataset/lang_pair/system"
  [[nodiscard]] std::string str() const { return dataset_type + "/" + dataset + "/" + lang_pair + "/" + system; }

  friend bool operator==(const EvaluationKey&, const EvaluationKey&) = default;
  friend auto operator<=>(const EvaluationKey&, const EvaluationKey&) = default;
};

struct EvaluationSet {
  EvaluationKey key;
  std::vector<Segment> segments;

  void validate() const {
    if (key.dataset_type.empty() || key.dataset.empty() || key.lang_pair.empty() || key.system.empty()) {
      throw Error(ErrorCode::invalid_parameter, "evaluation key '" + key.str() + "' has an empty field");
    }
    if (segments.empty()) throw Error(ErrorCode::empty_evaluation, "evaluation '" + key.str() + "' has no segments");
  }
};

}  // namespace mtagg

#endif  // MTAGG_EVALUATION_SET_HPP_
