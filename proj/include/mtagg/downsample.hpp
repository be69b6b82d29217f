#ifndef MTAGG_DOWNSAMPLE_HPP_
#define MTAGG_DOWNSAMPLE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mtagg/aggregation.hpp"
#include "mtagg/correlation.hpp"
#include "mtagg/error.hpp"
#include "mtagg/evaluation_set.hpp"
#include "mtagg/metric.hpp"
#include "mtagg/parallel.hpp"
#include "mtagg/report.hpp"
#include "mtagg/rng.hpp"

namespace mtagg {

struct DownsampleStudySpec {
  std::vector<std::uint64_t> sizes{1, 10, 100};
  std::uint64_t repetitions = 1000;
  std::uint64_t seed = 0;
  /// Full-corpus bootstrap used as the robustness anchor.
  ResamplePlan reference_plan{};
  /// Precomputed anchor scores by system key; when non-empty, used instead
  /// of running reference_plan.
  std::map<EvaluationKey, double> reference_scores;

  void validate() const {
    if (sizes.empty()) throw Error(ErrorCode::invalid_parameter, "downsample sizes are empty");
    for (auto n : sizes) {
      if (n < 1) throw Error(ErrorCode::invalid_parameter, "downsample sizes must be >= 1");
    }
    if (repetitions < 1) throw Error(ErrorCode::invalid_parameter, "repetitions must be >= 1");
    reference_plan.validate();
  }
};

enum class MethodPair { cla_vs_sla, cla_vs_brs, sla_vs_brs };

inline constexpr MethodPair kMethodPairs[] = {MethodPair::cla_vs_sla, MethodPair::cla_vs_brs,
                                              MethodPair::sla_vs_brs};

constexpr std::string_view to_string(MethodPair p) {
  switch (p) {
    case MethodPair::cla_vs_sla: return "cla_ds~sla_ds";
    case MethodPair::cla_vs_brs: return "cla_ds~brs_full";
    case MethodPair::sla_vs_brs: return "sla_ds~brs_full";
  }
  return "unknown";
}

struct DownsampledScores {
  double cla = 0;
  double sla = 0;
};

/// Segment indices (canonical order) of one downsampled test set: min(size,
/// n) distinct indices drawn uniformly by a partial Fisher-Yates shuffle on
/// `stream`, returned sorted so a full-size draw reproduces full-corpus
/// arithmetic exactly.
inline std::vector<std::size_t> draw_without_replacement(std::size_t n, std::uint64_t size, rng::Stream& stream) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const std::size_t take = static_cast<std::size_t>(std::min<std::uint64_t>(size, n));
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(stream.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(take);
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Stream for one (size, repetition, system) draw.
inline rng::Stream downsample_stream(std::uint64_t seed, std::uint64_t size, std::uint64_t repetition,
                                     const EvaluationKey& key) {
  return rng::Stream(rng::derive(seed, size, repetition, rng::fnv1a64(key.str())));
}

/// CLA and SLA of the same downsampled subset.
template <AdditiveMetric M>
DownsampledScores downsample_scores(const PreparedCorpus<M>& corpus, std::uint64_t size, std::uint64_t repetition,
                                    std::uint64_t seed, const EvaluationKey& key) {
  auto stream = downsample_stream(seed, size, repetition, key);
  const auto idx = draw_without_replacement(corpus.size(), size, stream);
  return {corpus.corpus_score_of(idx), corpus.segment_mean_of(idx)};
}

/// Robustness of CLA and SLA under test-set downsampling.
///
/// For every size N and repetition r, each system is downsampled to N
/// segments (without replacement), CLA and SLA are computed on that same
/// subset, and three Pearson values are taken across systems:
/// corr(CLA_ds, SLA_ds), corr(CLA_ds, BRS_full), corr(SLA_ds, BRS_full).
/// Each (N, pair) cell of the report holds the R-sized distribution;
/// degenerate repetitions are excluded and counted.
template <AdditiveMetric M>
CorrelationReport downsample_study(const std::vector<EvaluationSet>& systems, const DownsampleStudySpec& spec,
                                   const M& metric, std::size_t workers = 1) {
  spec.validate();
  if (systems.empty()) throw Error(ErrorCode::empty_evaluation, "no systems to downsample");

  std::vector<const EvaluationSet*> ordered;
  for (const auto& s : systems) {
    s.validate();
    ordered.push_back(&s);
  }
  std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) { return a->key < b->key; });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i - 1]->key == ordered[i]->key) {
      throw Error(ErrorCode::duplicate, "duplicate system '" + ordered[i]->key.str() + "'");
    }
  }

  const std::size_t num_systems = ordered.size();
  std::vector<std::optional<PreparedCorpus<M>>> corpora(num_systems);
  parallel_for(num_systems, workers, [&](std::size_t i) { corpora[i].emplace(metric, ordered[i]->segments); });

  std::vector<double> brs(num_systems);
  if (!spec.reference_scores.empty()) {
    for (std::size_t i = 0; i < num_systems; ++i) {
      auto it = spec.reference_scores.find(ordered[i]->key);
      if (it == spec.reference_scores.end()) {
        throw Error(ErrorCode::alignment, "no reference score for '" + ordered[i]->key.str() + "'");
      }
      brs[i] = it->second;
    }
  } else {
    parallel_for(num_systems, workers,
                 [&](std::size_t i) { brs[i] = bootstrap_aggregate(*corpora[i], spec.reference_plan).value; });
  }

  const std::size_t reps = static_cast<std::size_t>(spec.repetitions);
  const std::size_t cells = spec.sizes.size() * reps;
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  // results[cell][pair]; NaN marks an excluded (degenerate) repetition
  std::vector<std::array<double, 3>> results(cells, {kNaN, kNaN, kNaN});
  parallel_for(cells, workers, [&](std::size_t cell) {
    const std::uint64_t size = spec.sizes[cell / reps];
    const std::uint64_t r = cell % reps;
    std::vector<double> cla(num_systems), sla(num_systems);
    for (std::size_t i = 0; i < num_systems; ++i) {
      const auto ds = downsample_scores(*corpora[i], size, r, spec.seed, ordered[i]->key);
      cla[i] = ds.cla;
      sla[i] = ds.sla;
    }
    auto corr = [](const std::vector<double>& a, const std::vector<double>& b) {
      try {
        return pearson(std::span<const double>(a), std::span<const double>(b));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::degenerate_input) throw;
        return kNaN;
      }
    };
    results[cell] = {corr(cla, sla), corr(cla, brs), corr(sla, brs)};
  });

  CorrelationReport report;
  report.variant = CorrelationVariant::distribution;
  for (std::size_t s = 0; s < spec.sizes.size(); ++s) {
    for (std::size_t p = 0; p < 3; ++p) {
      NamedDistribution d;
      d.size = spec.sizes[s];
      d.pair = std::string(to_string(kMethodPairs[p]));
      d.name = "N=" + std::to_string(d.size) + "|" + d.pair;
      for (std::size_t r = 0; r < reps; ++r) {
        const double v = results[s * reps + r][p];
        if (std::isnan(v)) {
          ++d.excluded;
        } else {
          d.values.push_back(v);
        }
      }
      if (!d.values.empty()) d.summary = summarize(d.values);
      if (d.excluded) {
        report.warnings.push_back(d.name + ": " + std::to_string(d.excluded) + " degenerate repetition(s) excluded");
      }
      report.names.push_back(d.name);
      report.distributions.push_back(std::move(d));
    }
  }
  return report;
}

inline CorrelationReport downsample_study(const std::vector<EvaluationSet>& systems, const DownsampleStudySpec& spec,
                                          const MetricSpec& metric, std::size_t workers = 1) {
  return std::visit([&](const auto& m) { return downsample_study(systems, spec, m, workers); }, metric);
}

}  // namespace mtagg

#endif  // MTAGG_DOWNSAMPLE_HPP_
