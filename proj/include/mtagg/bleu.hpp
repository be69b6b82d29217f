#ifndef MTAGG_BLEU_HPP_
#define MTAGG_BLEU_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mtagg/error.hpp"
#include "mtagg/ngrams.hpp"
#include "mtagg/score.hpp"
#include "mtagg/segment.hpp"
#include "mtagg/tokenizer.hpp"

namespace mtagg {

enum class Smoothing { exp, none };

constexpr std::string_view to_string(Smoothing s) { return s == Smoothing::exp ? "exp" : "none"; }

inline Smoothing parse_smoothing(std::string_view s) {
  if (s == "exp") return Smoothing::exp;
  if (s == "none") return Smoothing::none;
  throw Error(ErrorCode::invalid_parameter, "unknown smoothing '" + std::string(s) + "'");
}

/// Sufficient statistics for BLEU. Index k of the per-order arrays holds
/// n-gram order k+1. Additive: the component-wise sum over segments is the
/// corpus statistic.
struct BleuStats {
  std::vector<std::uint64_t> clipped_matches;
  std::vector<std::uint64_t> hyp_ngrams;
  std::uint64_t hyp_len = 0;
  std::uint64_t ref_len = 0;

  static BleuStats zero(int n_max) {
    const auto n = static_cast<std::size_t>(n_max);
    return BleuStats{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0), 0, 0};
  }

  [[nodiscard]] int max_order() const noexcept { return static_cast<int>(hyp_ngrams.size()); }

  BleuStats& operator+=(const BleuStats& other) {
    if (other.hyp_ngrams.size() != hyp_ngrams.size()) {
      throw Error(ErrorCode::invalid_parameter, "cannot add BLEU statistics of different max order");
    }
    for (std::size_t k = 0; k < hyp_ngrams.size(); ++k) {
      clipped_matches[k] += other.clipped_matches[k];
      hyp_ngrams[k] += other.hyp_ngrams[k];
    }
    hyp_len += other.hyp_len;
    ref_len += other.ref_len;
    return *this;
  }

  friend BleuStats operator+(BleuStats a, const BleuStats& b) { return a += b; }
  friend bool operator==(const BleuStats&, const BleuStats&) = default;
};

struct BleuParams {
  int n_max = 4;
  Smoothing smoothing = Smoothing::exp;

  void validate() const {
    if (n_max < 1) throw Error(ErrorCode::invalid_parameter, "BLEU n_max must be >= 1");
  }
};

/// Clipped n-gram matches of the 13a-tokenized hypothesis against the
/// per-n-gram maximum count over all references. The effective reference
/// length is the reference length closest to the hypothesis length, ties
/// toward the shorter reference.
inline BleuStats bleu_stats(const Segment& segment, int n_max = 4) {
  detail::check_order(n_max);
  const TokenSequence hyp = tokenize_13a(segment.hypothesis());
  const auto hyp_grams = word_ngrams_upto(hyp, n_max);

  std::vector<std::unordered_map<std::string, std::uint32_t>> ref_max(static_cast<std::size_t>(n_max));
  const auto hyp_len = static_cast<std::uint64_t>(hyp.size());
  std::uint64_t best_len = 0;
  std::uint64_t best_diff = 0;
  bool have_best = false;

  for (const auto& ref_text : segment.references()) {
    const TokenSequence ref = tokenize_13a(ref_text);
    const auto len = static_cast<std::uint64_t>(ref.size());
    const std::uint64_t diff = len > hyp_len ? len - hyp_len : hyp_len - len;
    if (!have_best || diff < best_diff || (diff == best_diff && len < best_len)) {
      best_len = len;
      best_diff = diff;
      have_best = true;
    }
    for (int n = 1; n <= n_max; ++n) {
      auto& dst = ref_max[static_cast<std::size_t>(n - 1)];
      for (const auto& [gram, count] : word_ngrams(ref, n).counts) {
        auto& slot = dst[gram];
        slot = std::max(slot, count);
      }
    }
  }

  BleuStats stats = BleuStats::zero(n_max);
  stats.hyp_len = hyp_len;
  stats.ref_len = best_len;
  for (std::size_t k = 0; k < hyp_grams.size(); ++k) {
    const auto& refs = ref_max[k];
    for (const auto& [gram, count] : hyp_grams[k].counts) {
      stats.hyp_ngrams[k] += count;
      if (auto it = refs.find(gram); it != refs.end()) {
        stats.clipped_matches[k] += std::min(count, it->second);
      }
    }
  }
  return stats;
}

/// Geometric mean of the per-order precisions times the brevity penalty.
///
/// With exp smoothing, each order without matches gets precision
/// 1 / (2^k * total) where k counts the zero-match orders seen so far. The
/// score is 0 when nothing matched at any order, when the hypothesis is
/// empty, or when some order has no hypothesis n-grams at all.
inline Score bleu_score(const BleuStats& stats, Smoothing smoothing = Smoothing::exp) {
  const std::size_t orders = stats.hyp_ngrams.size();
  if (orders == 0 || stats.clipped_matches.size() != orders) {
    throw Error(ErrorCode::invalid_parameter, "malformed BLEU statistics");
  }

  ScoreDetail detail;
  detail.precisions.assign(orders, 0.0);
  double bp = 1.0;
  if (stats.hyp_len < stats.ref_len) {
    bp = stats.hyp_len > 0
             ? std::exp(1.0 - static_cast<double>(stats.ref_len) / static_cast<double>(stats.hyp_len))
             : 0.0;
  }
  detail.brevity_penalty = bp;
  Score result{0.0, MetricId::bleu, std::nullopt};

  const bool any_match = std::any_of(stats.clipped_matches.begin(), stats.clipped_matches.end(),
                                     [](std::uint64_t m) { return m > 0; });
  if (!any_match || stats.hyp_len == 0) {
    result.detail = std::move(detail);
    return result;
  }

  double smooth = 1.0;
  double log_sum = 0.0;
  for (std::size_t k = 0; k < orders; ++k) {
    const auto total = static_cast<double>(stats.hyp_ngrams[k]);
    const auto matches = static_cast<double>(stats.clipped_matches[k]);
    if (stats.hyp_ngrams[k] == 0) {
      result.detail = std::move(detail);
      return result;
    }
    double p = 0.0;
    if (stats.clipped_matches[k] == 0) {
      if (smoothing == Smoothing::none) {
        result.detail = std::move(detail);
        return result;
      }
      smooth *= 2.0;
      p = 1.0 / (smooth * total);
    } else {
      p = matches / total;
    }
    detail.precisions[k] = p;
    log_sum += std::log(p);
  }
  result.value = bp * std::exp(log_sum / static_cast<double>(orders));
  result.detail = std::move(detail);
  return result;
}

struct BleuMetric {
  using Stats = BleuStats;
  static constexpr MetricId id = MetricId::bleu;

  BleuParams params;

  [[nodiscard]] Stats stats(const Segment& segment) const { return bleu_stats(segment, params.n_max); }
  [[nodiscard]] Stats zero() const { return BleuStats::zero(params.n_max); }
  [[nodiscard]] Score score(const Stats& s) const { return bleu_score(s, params.smoothing); }

  [[nodiscard]] std::string signature(std::size_t nrefs = 1) const {
    std::string sig = "nrefs:" + std::to_string(nrefs) + "|case:mixed|eff:no|tok:13a|smooth:" +
                      std::string(to_string(params.smoothing));
    if (params.n_max != 4) sig += "|ngram:" + std::to_string(params.n_max);
    return sig;
  }
};

}  // namespace mtagg

#endif  // MTAGG_BLEU_HPP_
