#ifndef MTAGG_SEGMENT_HPP_
#define MTAGG_SEGMENT_HPP_

#include <compare>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mtagg/error.hpp"

namespace mtagg {

/// One hypothesis with its reference translation(s). The hypothesis may be
/// empty; the reference list may not.
class Segment {
 public:
  Segment(std::string hypothesis, std::vector<std::string> references, std::string id = {})
      : hypothesis_(std::move(hypothesis)), references_(std::move(references)), id_(std::move(id)) {
    if (references_.empty()) {
      throw Error(ErrorCode::invalid_parameter, "segment '" + id_ + "' has no references");
    }
  }

  Segment(std::string hypothesis, std::string reference, std::string id = {})
      : Segment(std::move(hypothesis), std::vector<std::string>{std::move(reference)},
                std::move(id)) {}

  [[nodiscard]] const std::string& hypothesis() const noexcept { return hypothesis_; }
  [[nodiscard]] const std::vector<std::string>& references() const noexcept { return references_; }
  [[nodiscard]] const std::string& id() const noexcept { return id_; }

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment& a, const Segment& b) {
    return std::tie(a.id_, a.hypothesis_, a.references_) <=>
           std::tie(b.id_, b.hypothesis_, b.references_);
  }

 private:
  std::string hypothesis_;
  std::vector<std::string> references_;
  std::string id_;
};

}  // namespace mtagg

#endif  // MTAGG_SEGMENT_HPP_
