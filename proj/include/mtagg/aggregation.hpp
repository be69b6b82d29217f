#ifndef MTAGG_AGGREGATION_HPP_
#define MTAGG_AGGREGATION_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtagg/bleu.hpp"
#include "mtagg/error.hpp"
#include "mtagg/metric.hpp"
#include "mtagg/numeric.hpp"
#include "mtagg/parallel.hpp"
#include "mtagg/rng.hpp"
#include "mtagg/score.hpp"
#include "mtagg/segment.hpp"

namespace mtagg {

enum class AggregationKind { corpus, segment_mean, bootstrap };

constexpr std::string_view to_string(AggregationKind k) {
  switch (k) {
    case AggregationKind::corpus: return "corpus";
    case AggregationKind::segment_mean: return "segment";
    case AggregationKind::bootstrap: return "bootstrap";
  }
  return "unknown";
}

inline AggregationKind parse_aggregation_kind(std::string_view s) {
  if (s == "corpus") return AggregationKind::corpus;
  if (s == "segment" || s == "segment_mean") return AggregationKind::segment_mean;
  if (s == "bootstrap") return AggregationKind::bootstrap;
  throw Error(ErrorCode::invalid_parameter, "unknown aggregation '" + std::string(s) + "'");
}

/// B resamples of S segments each, drawn with replacement.
struct ResamplePlan {
  std::uint64_t num_resamples = 1000;
  std::uint64_t resample_size = 1000;
  std::uint64_t seed = 0;

  void validate() const {
    if (num_resamples < 1) throw Error(ErrorCode::invalid_parameter, "num_resamples must be >= 1");
    if (resample_size < 1) throw Error(ErrorCode::invalid_parameter, "resample_size must be >= 1");
  }

  friend bool operator==(const ResamplePlan&, const ResamplePlan&) = default;
};

/// Aggregation strategy. A resample plan exists exactly for bootstrap.
class AggregationMethod {
 public:
  static AggregationMethod corpus() { return AggregationMethod(AggregationKind::corpus, std::nullopt); }
  static AggregationMethod segment_mean() {
    return AggregationMethod(AggregationKind::segment_mean, std::nullopt);
  }
  static AggregationMethod bootstrap(const ResamplePlan& plan) {
    plan.validate();
    return AggregationMethod(AggregationKind::bootstrap, plan);
  }

  [[nodiscard]] AggregationKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::optional<ResamplePlan>& plan() const noexcept { return plan_; }

  /// Suffix appended to a metric signature, e.g. "|agg:bootstrap|B:1000|S:1000|seed:7".
  [[nodiscard]] std::string signature() const {
    std::string s = "|agg:" + std::string(to_string(kind_));
    if (plan_) {
      s += "|B:" + std::to_string(plan_->num_resamples) + "|S:" + std::to_string(plan_->resample_size) +
           "|seed:" + std::to_string(plan_->seed);
    }
    return s;
  }

  friend bool operator==(const AggregationMethod&, const AggregationMethod&) = default;

 private:
  AggregationMethod(AggregationKind kind, std::optional<ResamplePlan> plan) : kind_(kind), plan_(plan) {}

  AggregationKind kind_;
  std::optional<ResamplePlan> plan_;
};

/// A system-level score. `dispersion` is the population standard deviation
/// of the per-segment (segment_mean) or per-resample (bootstrap) scores and
/// is absent for corpus aggregation.
struct SystemScore {
  double value = 0.0;
  MetricId metric = MetricId::bleu;
  AggregationMethod method = AggregationMethod::corpus();
  std::size_t num_segments = 0;
  std::optional<double> dispersion;
  std::string provenance;
};

/// Per-segment statistics and sentence-level scores of a corpus, held in a
/// canonical order (sorted by segment id, then content) so every aggregate
/// is independent of ingestion order.
template <AdditiveMetric M>
class PreparedCorpus {
 public:
  using Stats = typename M::Stats;

  PreparedCorpus(M metric, std::span<const Segment> segments, std::size_t workers = 1)
      : metric_(std::move(metric)) {
    if (segments.empty()) throw Error(ErrorCode::empty_evaluation, "no segments to aggregate");
    std::vector<std::size_t> order(segments.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return segments[a] < segments[b]; });

    stats_.resize(segments.size());
    scores_.resize(segments.size());
    parallel_for(segments.size(), workers, [&](std::size_t i) {
      stats_[i] = metric_.stats(segments[order[i]]);
      scores_[i] = metric_.score(stats_[i]).value;
    });
    for (const auto& seg : segments) nrefs_ = std::max(nrefs_, seg.references().size());
  }

  [[nodiscard]] std::size_t size() const noexcept { return stats_.size(); }
  [[nodiscard]] const M& metric() const noexcept { return metric_; }
  [[nodiscard]] const Stats& stats(std::size_t i) const { return stats_[i]; }
  [[nodiscard]] std::span<const double> segment_scores() const noexcept { return scores_; }
  [[nodiscard]] std::size_t nrefs() const noexcept { return nrefs_; }

  [[nodiscard]] Stats total() const {
    Stats acc = metric_.zero();
    for (const auto& s : stats_) acc += s;
    return acc;
  }

  /// Corpus-level score of the segments at `indices` (repeats allowed).
  [[nodiscard]] double corpus_score_of(std::span<const std::size_t> indices) const {
    Stats acc = metric_.zero();
    for (std::size_t i : indices) acc += stats_[i];
    return metric_.score(acc).value;
  }

  [[nodiscard]] double segment_mean_of(std::span<const std::size_t> indices) const {
    std::vector<double> xs;
    xs.reserve(indices.size());
    for (std::size_t i : indices) xs.push_back(scores_[i]);
    return numeric::mean(xs);
  }

  [[nodiscard]] std::string provenance(const AggregationMethod& method) const {
    return std::string(to_string(M::id)) + ":" + metric_.signature(nrefs_) + method.signature();
  }

 private:
  M metric_;
  std::vector<Stats> stats_;
  std::vector<double> scores_;
  std::size_t nrefs_ = 0;
};

/// Sums the per-segment statistics and scores them once.
template <AdditiveMetric M>
SystemScore corpus_aggregate(const PreparedCorpus<M>& corpus) {
  const auto method = AggregationMethod::corpus();
  return SystemScore{corpus.metric().score(corpus.total()).value, M::id, method, corpus.size(),
                     std::nullopt, corpus.provenance(method)};
}

/// Mean of the sentence-level scores.
template <AdditiveMetric M>
SystemScore segment_aggregate(const PreparedCorpus<M>& corpus) {
  const auto method = AggregationMethod::segment_mean();
  const auto scores = corpus.segment_scores();
  return SystemScore{numeric::mean(scores), M::id, method, corpus.size(),
                     numeric::population_stddev(scores), corpus.provenance(method)};
}

/// Corpus-level scores of each resample, in resample order. Resample b draws
/// its indices from the stream derived from (seed, b), so the result does not
/// depend on the number of workers.
template <AdditiveMetric M>
std::vector<double> bootstrap_scores(const PreparedCorpus<M>& corpus, const ResamplePlan& plan,
                                     std::size_t workers = 1) {
  plan.validate();
  std::vector<double> scores(plan.num_resamples);
  const std::uint64_t n = corpus.size();
  parallel_for(scores.size(), workers, [&](std::size_t b) {
    rng::Stream stream(rng::derive(plan.seed, b));
    auto acc = corpus.metric().zero();
    for (std::uint64_t s = 0; s < plan.resample_size; ++s) acc += corpus.stats(stream.below(n));
    scores[b] = corpus.metric().score(acc).value;
  });
  return scores;
}

/// Mean and population standard deviation of the B resampled corpus scores.
template <AdditiveMetric M>
SystemScore bootstrap_aggregate(const PreparedCorpus<M>& corpus, const ResamplePlan& plan,
                                std::size_t workers = 1) {
  const auto method = AggregationMethod::bootstrap(plan);
  const auto scores = bootstrap_scores(corpus, plan, workers);
  return SystemScore{numeric::mean(scores), M::id, method, corpus.size(),
                     numeric::population_stddev(scores), corpus.provenance(method)};
}

template <AdditiveMetric M>
SystemScore aggregate(const PreparedCorpus<M>& corpus, const AggregationMethod& method,
                      std::size_t workers = 1) {
  switch (method.kind()) {
    case AggregationKind::corpus: return corpus_aggregate(corpus);
    case AggregationKind::segment_mean: return segment_aggregate(corpus);
    case AggregationKind::bootstrap: return bootstrap_aggregate(corpus, *method.plan(), workers);
  }
  throw Error(ErrorCode::invalid_parameter, "unknown aggregation");
}

// Convenience overloads taking raw segments and a metric.

template <AdditiveMetric M>
SystemScore corpus_aggregate(std::span<const Segment> segments, const M& metric) {
  return corpus_aggregate(PreparedCorpus<M>(metric, segments));
}

template <AdditiveMetric M>
SystemScore segment_aggregate(std::span<const Segment> segments, const M& metric) {
  return segment_aggregate(PreparedCorpus<M>(metric, segments));
}

template <AdditiveMetric M>
SystemScore bootstrap_aggregate(std::span<const Segment> segments, const M& metric,
                                const ResamplePlan& plan, std::size_t workers = 1) {
  return bootstrap_aggregate(PreparedCorpus<M>(metric, segments, workers), plan, workers);
}

/// Raw (unsmoothed) pooled precision of n-gram order `order`:
/// sum of clipped matches over sum of hypothesis n-grams. Throws
/// degenerate-input when no segment has an n-gram of that order.
inline double corpus_order_precision(std::span<const BleuStats> stats, int order) {
  if (stats.empty()) throw Error(ErrorCode::empty_evaluation, "no segments to aggregate");
  const auto k = static_cast<std::size_t>(order - 1);
  std::uint64_t m = 0, w = 0;
  for (const auto& s : stats) {
    if (order < 1 || order > s.max_order()) throw Error(ErrorCode::invalid_parameter, "order out of range");
    m += s.clipped_matches[k];
    w += s.hyp_ngrams[k];
  }
  if (w == 0) throw Error(ErrorCode::degenerate_input, "no hypothesis n-grams of order " + std::to_string(order));
  return static_cast<double>(m) / static_cast<double>(w);
}

/// Unweighted mean of the raw per-segment precisions of order `order`,
/// over the segments that have at least one n-gram of that order.
inline double segment_mean_order_precision(std::span<const BleuStats> stats, int order) {
  if (stats.empty()) throw Error(ErrorCode::empty_evaluation, "no segments to aggregate");
  const auto k = static_cast<std::size_t>(order - 1);
  std::vector<double> ratios;
  for (const auto& s : stats) {
    if (order < 1 || order > s.max_order()) throw Error(ErrorCode::invalid_parameter, "order out of range");
    if (s.hyp_ngrams[k] > 0) {
      ratios.push_back(static_cast<double>(s.clipped_matches[k]) / static_cast<double>(s.hyp_ngrams[k]));
    }
  }
  if (ratios.empty()) throw Error(ErrorCode::degenerate_input, "no hypothesis n-grams of order " + std::to_string(order));
  return numeric::mean(ratios);
}

/// Runtime-dispatched aggregation over raw segments.
inline SystemScore aggregate(std::span<const Segment> segments, const MetricSpec& metric,
                             const AggregationMethod& method, std::size_t workers = 1) {
  return std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        return aggregate(PreparedCorpus<M>(m, segments, workers), method, workers);
      },
      metric);
}

}  // namespace mtagg

#endif  // MTAGG_AGGREGATION_HPP_
