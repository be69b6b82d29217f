#ifndef MTAGG_NUMERIC_HPP_
#define MTAGG_NUMERIC_HPP_

#include <cmath>
#include <span>

#include "mtagg/error.hpp"

namespace mtagg::numeric {

/// Neumaier-compensated running sum. Adding the same values in the same
/// order always yields the same bits.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double sum(std::span<const double> xs) noexcept {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

/// Mean computed as x[0] plus the mean offset from x[0], so a constant
/// sequence returns its value bit-for-bit.
inline double mean(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorCode::empty_evaluation, "mean of an empty sequence");
  const double pivot = xs.front();
  CompensatedSum acc;
  for (double x : xs) acc.add(x - pivot);
  return pivot + acc.value() / static_cast<double>(xs.size());
}

/// Population standard deviation (divides by n).
inline double population_stddev(std::span<const double> xs) {
  const double m = mean(xs);
  CompensatedSum acc;
  for (double x : xs) acc.add((x - m) * (x - m));
  return std::sqrt(acc.value() / static_cast<double>(xs.size()));
}

}  // namespace mtagg::numeric

#endif  // MTAGG_NUMERIC_HPP_
