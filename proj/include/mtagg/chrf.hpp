#ifndef MTAGG_CHRF_HPP_
#define MTAGG_CHRF_HPP_

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mtagg/error.hpp"
#include "mtagg/ngrams.hpp"
#include "mtagg/score.hpp"
#include "mtagg/segment.hpp"

namespace mtagg {

/// How per-order statistics are combined into one F-score.
///  - pooled: average P and R over the orders with defined statistics, then
///    combine once. This is what the 13a/sacreBLEU-family chrF reports.
///  - per_order_f: F-score per order, then the arithmetic mean of those.
enum class ChrfAveraging { pooled, per_order_f };

constexpr std::string_view to_string(ChrfAveraging a) {
  return a == ChrfAveraging::pooled ? "pooled" : "per-order-f";
}

inline ChrfAveraging parse_chrf_averaging(std::string_view s) {
  if (s == "pooled") return ChrfAveraging::pooled;
  if (s == "per-order-f") return ChrfAveraging::per_order_f;
  throw Error(ErrorCode::invalid_parameter, "unknown chrF averaging '" + std::string(s) + "'");
}

/// Per-order character n-gram statistics; index k holds order k+1.
struct ChrfStats {
  std::vector<std::uint64_t> matches;
  std::vector<std::uint64_t> hyp_count;
  std::vector<std::uint64_t> ref_count;

  static ChrfStats zero(int c_max) {
    const auto n = static_cast<std::size_t>(c_max);
    return ChrfStats{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0),
                     std::vector<std::uint64_t>(n, 0)};
  }

  [[nodiscard]] int max_order() const noexcept { return static_cast<int>(matches.size()); }

  ChrfStats& operator+=(const ChrfStats& other) {
    if (other.matches.size() != matches.size()) {
      throw Error(ErrorCode::invalid_parameter, "cannot add chrF statistics of different max order");
    }
    for (std::size_t k = 0; k < matches.size(); ++k) {
      matches[k] += other.matches[k];
      hyp_count[k] += other.hyp_count[k];
      ref_count[k] += other.ref_count[k];
    }
    return *this;
  }

  friend ChrfStats operator+(ChrfStats a, const ChrfStats& b) { return a += b; }
  friend bool operator==(const ChrfStats&, const ChrfStats&) = default;
};

struct ChrfParams {
  int c_max = 6;
  double beta = 2.0;
  bool strip_whitespace = true;
  ChrfAveraging averaging = ChrfAveraging::pooled;

  void validate() const {
    if (c_max < 1) throw Error(ErrorCode::invalid_parameter, "chrF c_max must be >= 1");
    if (!(beta > 0.0)) throw Error(ErrorCode::invalid_parameter, "chrF beta must be > 0");
  }
};

inline Score chrf_score(const ChrfStats& stats, double beta = 2.0,
                        ChrfAveraging averaging = ChrfAveraging::pooled) {
  if (!(beta > 0.0)) {
    throw Error(ErrorCode::invalid_parameter, "chrF beta must be > 0");
  }
  const std::size_t orders = stats.matches.size();
  if (stats.hyp_count.size() != orders || stats.ref_count.size() != orders) {
    throw Error(ErrorCode::invalid_parameter, "malformed chrF statistics");
  }
  const double b2 = beta * beta;
  auto f_beta = [b2](double p, double r) {
    const double denom = b2 * p + r;
    return denom > 0.0 ? (1.0 + b2) * p * r / denom : 0.0;
  };

  ScoreDetail detail;
  detail.precisions.assign(orders, 0.0);
  detail.recalls.assign(orders, 0.0);
  double sum_p = 0.0;
  double sum_r = 0.0;
  double sum_f = 0.0;
  std::size_t defined = 0;
  for (std::size_t k = 0; k < orders; ++k) {
    if (stats.hyp_count[k] == 0 || stats.ref_count[k] == 0) continue;
    const double p = static_cast<double>(stats.matches[k]) / static_cast<double>(stats.hyp_count[k]);
    const double r = static_cast<double>(stats.matches[k]) / static_cast<double>(stats.ref_count[k]);
    detail.precisions[k] = p;
    detail.recalls[k] = r;
    sum_p += p;
    sum_r += r;
    sum_f += f_beta(p, r);
    ++defined;
  }

  Score result{0.0, MetricId::chrf, std::move(detail)};
  if (defined == 0) return result;
  const auto d = static_cast<double>(defined);
  result.value = averaging == ChrfAveraging::pooled ? f_beta(sum_p / d, sum_r / d) : sum_f / d;
  return result;
}

/// Character n-gram statistics against the best reference, i.e. the first
/// reference reaching the highest segment chrF under `params`. Hypothesis
/// counts of an order are reported as 0 when the chosen reference has no
/// n-grams of that order.
inline ChrfStats chrf_stats(const Segment& segment, const ChrfParams& params = {}) {
  params.validate();
  const auto hyp = char_ngrams_upto(segment.hypothesis(), params.c_max, params.strip_whitespace);

  ChrfStats best;
  double best_f = -1.0;
  for (const auto& ref_text : segment.references()) {
    const auto ref = char_ngrams_upto(ref_text, params.c_max, params.strip_whitespace);
    ChrfStats stats = ChrfStats::zero(params.c_max);
    for (std::size_t k = 0; k < hyp.size(); ++k) {
      std::uint64_t matched = 0;
      for (const auto& [gram, count] : hyp[k].counts) {
        if (auto it = ref[k].counts.find(gram); it != ref[k].counts.end()) {
          matched += std::min(count, it->second);
        }
      }
      stats.matches[k] = matched;
      stats.hyp_count[k] = ref[k].empty() ? 0 : hyp[k].total();
      stats.ref_count[k] = ref[k].total();
    }
    const double f = chrf_score(stats, params.beta, params.averaging).value;
    if (f > best_f) {
      best_f = f;
      best = std::move(stats);
    }
  }
  return best;
}

inline ChrfStats chrf_stats(const Segment& segment, int c_max, bool strip_whitespace = true) {
  ChrfParams params;
  params.c_max = c_max;
  params.strip_whitespace = strip_whitespace;
  return chrf_stats(segment, params);
}

struct ChrfMetric {
  using Stats = ChrfStats;
  static constexpr MetricId id = MetricId::chrf;

  ChrfParams params;

  [[nodiscard]] Stats stats(const Segment& segment) const { return chrf_stats(segment, params); }
  [[nodiscard]] Stats zero() const { return ChrfStats::zero(params.c_max); }
  [[nodiscard]] Score score(const Stats& s) const {
    return chrf_score(s, params.beta, params.averaging);
  }

  [[nodiscard]] std::string signature(std::size_t nrefs = 1) const {
    std::string sig = "nrefs:" + std::to_string(nrefs) + "|case:mixed|eff:yes|nc:" +
                      std::to_string(params.c_max) + "|nw:0|space:" +
                      (params.strip_whitespace ? "no" : "yes");
    if (params.beta != 2.0) {
      std::ostringstream os;
      os << params.beta;
      sig += "|beta:" + os.str();
    }
    if (params.averaging != ChrfAveraging::pooled) sig += "|avg:" + std::string(to_string(params.averaging));
    return sig;
  }
};

}  // namespace mtagg

#endif  // MTAGG_CHRF_HPP_
