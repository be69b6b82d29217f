#ifndef MTAGG_METRIC_HPP_
#define MTAGG_METRIC_HPP_

#include <concepts>
#include <string>
#include <variant>

#include "mtagg/bleu.hpp"
#include "mtagg/chrf.hpp"
#include "mtagg/score.hpp"
#include "mtagg/segment.hpp"

namespace mtagg {

/// A metric whose segment statistics add up to corpus statistics and are
/// scored by one function at either granularity.
template <class M>
concept AdditiveMetric = requires(const M m, const Segment& seg, typename M::Stats st) {
  { m.stats(seg) } -> std::same_as<typename M::Stats>;
  { m.zero() } -> std::same_as<typename M::Stats>;
  { m.score(st) } -> std::same_as<Score>;
  { m.signature(std::size_t{1}) } -> std::convertible_to<std::string>;
  { st += st } -> std::same_as<typename M::Stats&>;
  { M::id } -> std::convertible_to<MetricId>;
};

static_assert(AdditiveMetric<BleuMetric>);
static_assert(AdditiveMetric<ChrfMetric>);

/// Runtime choice of metric, for code paths driven by configuration.
using MetricSpec = std::variant<BleuMetric, ChrfMetric>;

inline MetricId metric_id(const MetricSpec& spec) {
  return std::visit([](const auto& m) { return std::decay_t<decltype(m)>::id; }, spec);
}

inline std::string signature(const MetricSpec& spec, std::size_t nrefs = 1) {
  return std::visit([nrefs](const auto& m) { return m.signature(nrefs); }, spec);
}

}  // namespace mtagg

#endif  // MTAGG_METRIC_HPP_
