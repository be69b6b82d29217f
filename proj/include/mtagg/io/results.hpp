#ifndef MTAGG_IO_RESULTS_HPP_
#define MTAGG_IO_RESULTS_HPP_

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtagg/aggregation.hpp"
#include "mtagg/correlation.hpp"
#include "mtagg/evaluation_set.hpp"
#include "mtagg/format.hpp"
#include "mtagg/io/scores_table.hpp"
#include "mtagg/io/text.hpp"

namespace mtagg::io {

using nlohmann::json;

/// A system-level score together with the system it belongs to.
struct ScoredSystem {
  EvaluationKey key;
  SystemScore score;
};

/// Conventional short names: "bleu" (corpus), "m-bleu" (segment mean),
/// "x-bleu" (bootstrap), and the same for chrF.
inline std::string variant_name(MetricId metric, AggregationKind kind) {
  const std::string base(to_string(metric));
  switch (kind) {
    case AggregationKind::corpus: return base;
    case AggregationKind::segment_mean: return "m-" + base;
    case AggregationKind::bootstrap: return "x-" + base;
  }
  return base;
}

inline std::string variant_name(const SystemScore& s) { return variant_name(s.metric, s.method.kind()); }

// ---- numbers -------------------------------------------------------------

inline json number_or_null(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

inline double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

// ---- system scores -------------------------------------------------------

inline json to_json(const ScoredSystem& s) {
  json j;
  j["dataset_type"] = s.key.dataset_type;
  j["dataset"] = s.key.dataset;
  j["lang_pair"] = s.key.lang_pair;
  j["system"] = s.key.system;
  j["metric"] = std::string(to_string(s.score.metric));
  j["aggregation"] = std::string(to_string(s.score.method.kind()));
  j["variant"] = variant_name(s.score);
  j["value"] = s.score.value;
  j["dispersion"] = s.score.dispersion ? json(*s.score.dispersion) : json(nullptr);
  j["num_segments"] = s.score.num_segments;
  if (const auto& plan = s.score.method.plan()) {
    j["resamples"] = plan->num_resamples;
    j["resample_size"] = plan->resample_size;
    j["seed"] = plan->seed;
  }
  j["provenance"] = s.score.provenance;
  return j;
}

inline ScoredSystem scored_system_from_json(const json& j) {
  ScoredSystem s;
  s.key = {j.at("dataset_type").get<std::string>(), j.at("dataset").get<std::string>(),
           j.at("lang_pair").get<std::string>(), j.at("system").get<std::string>()};
  s.score.metric = parse_metric_id(j.at("metric").get<std::string>());
  const auto kind = parse_aggregation_kind(j.at("aggregation").get<std::string>());
  if (kind == AggregationKind::bootstrap) {
    s.score.method = AggregationMethod::bootstrap({j.at("resamples").get<std::uint64_t>(),
                                                   j.at("resample_size").get<std::uint64_t>(),
                                                   j.at("seed").get<std::uint64_t>()});
  } else {
    s.score.method = kind == AggregationKind::corpus ? AggregationMethod::corpus() : AggregationMethod::segment_mean();
  }
  s.score.value = j.at("value").get<double>();
  if (!j.at("dispersion").is_null()) s.score.dispersion = j.at("dispersion").get<double>();
  s.score.num_segments = j.at("num_segments").get<std::size_t>();
  s.score.provenance = j.at("provenance").get<std::string>();
  return s;
}

/// One JSON object per line, keys in sorted order, doubles in shortest
/// round-trip form.
inline std::string scores_to_jsonl(const std::vector<ScoredSystem>& scores) {
  std::string out;
  for (const auto& s : scores) out += to_json(s).dump() + '\n';
  return out;
}

inline std::vector<ScoredSystem> read_scores_jsonl(const fs::path& path) {
  std::vector<ScoredSystem> out;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      out.push_back(scored_system_from_json(json::parse(lines[i])));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::parse, "'" + path.string() + "' line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

inline constexpr const char* kScoresCsvHeader =
    "dataset_type,dataset,lang_pair,system,metric,aggregation,variant,value,dispersion,num_segments,"
    "resamples,resample_size,seed,provenance";

/// CSV with fixed 12-significant-digit numbers; empty fields for absent values.
inline std::string scores_to_csv(const std::vector<ScoredSystem>& scores) {
  std::ostringstream out;
  out << kScoresCsvHeader << '\n';
  auto f = [](const std::string& s) { return PlotDataset::csv_field(s); };
  for (const auto& s : scores) {
    const auto& plan = s.score.method.plan();
    out << f(s.key.dataset_type) << ',' << f(s.key.dataset) << ',' << f(s.key.lang_pair) << ','
        << f(s.key.system) << ',' << to_string(s.score.metric) << ',' << to_string(s.score.method.kind()) << ','
        << variant_name(s.score) << ',' << fmt::number(s.score.value) << ','
        << (s.score.dispersion ? fmt::number(*s.score.dispersion) : "") << ',' << s.score.num_segments << ','
        << (plan ? std::to_string(plan->num_resamples) : "") << ','
        << (plan ? std::to_string(plan->resample_size) : "") << ',' << (plan ? std::to_string(plan->seed) : "")
        << ',' << f(s.score.provenance) << '\n';
  }
  return out.str();
}

inline std::vector<ScoredSystem> read_scores_csv(const fs::path& path) {
  const CsvTable t = read_csv(path);
  std::vector<std::size_t> cols;
  for (const char* name : {"dataset_type", "dataset", "lang_pair", "system", "metric", "aggregation", "value",
                           "dispersion", "num_segments", "resamples", "resample_size", "seed", "provenance"}) {
    auto c = t.find_column(name);
    if (!c) throw Error(ErrorCode::parse, "'" + path.string() + "': missing column '" + name + "'");
    cols.push_back(*c);
  }
  std::vector<ScoredSystem> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    auto at = [&](std::size_t k) -> const std::string& { return row[cols[k]]; };
    try {
      ScoredSystem s;
      s.key = {at(0), at(1), at(2), at(3)};
      s.score.metric = parse_metric_id(at(4));
      const auto kind = parse_aggregation_kind(at(5));
      auto count = [](const std::string& x) { return static_cast<std::uint64_t>(std::stoull(x)); };
      if (kind == AggregationKind::bootstrap) {
        s.score.method = AggregationMethod::bootstrap({count(at(9)), count(at(10)), count(at(11))});
      } else {
        s.score.method =
            kind == AggregationKind::corpus ? AggregationMethod::corpus() : AggregationMethod::segment_mean();
      }
      s.score.value = fmt::parse_number(at(6));
      if (!at(7).empty()) s.score.dispersion = fmt::parse_number(at(7));
      s.score.num_segments = static_cast<std::size_t>(count(at(8)));
      s.score.provenance = at(12);
      out.push_back(std::move(s));
    } catch (const Error& e) {
      throw e.with_context("'" + path.string() + "' row " + std::to_string(t.row_lines[r]));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::parse, "'" + path.string() + "' row " + std::to_string(t.row_lines[r]) + ": bad count");
    }
  }
  return out;
}

// ---- correlation reports -------------------------------------------------

inline json to_json(const BoxplotSummary& s) {
  return json{{"min", s.min}, {"q1", s.q1}, {"median", s.median}, {"q3", s.q3},
              {"max", s.max}, {"mean", s.mean}, {"count", s.count}};
}

inline BoxplotSummary boxplot_from_json(const json& j) {
  return {j.at("min").get<double>(), j.at("q1").get<double>(),  j.at("median").get<double>(),
          j.at("q3").get<double>(),  j.at("max").get<double>(), j.at("mean").get<double>(),
          j.at("count").get<std::size_t>()};
}

inline json to_json(const CorrelationReport& r) {
  json j;
  j["variant"] = std::string(to_string(r.variant));
  j["names"] = r.names;
  json matrix = json::array();
  for (const auto& row : r.matrix) {
    json jr = json::array();
    for (double v : row) jr.push_back(number_or_null(v));
    matrix.push_back(std::move(jr));
  }
  j["matrix"] = std::move(matrix);
  j["failures"] = json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"row", f.row}, {"col", f.col}, {"message", f.message}});
  j["groups"] = json::array();
  for (const auto& g : r.groups) {
    j["groups"].push_back({{"group", g.group}, {"pearson", g.value}, {"num_systems", g.num_systems}});
  }
  j["mean"] = r.mean ? json(*r.mean) : json(nullptr);
  j["distributions"] = json::array();
  for (const auto& d : r.distributions) {
    j["distributions"].push_back({{"name", d.name},
                                  {"size", d.size},
                                  {"pair", d.pair},
                                  {"excluded", d.excluded},
                                  {"values", d.values},
                                  {"summary", d.summary ? to_json(*d.summary) : json(nullptr)}});
  }
  j["warnings"] = r.warnings;
  return j;
}

inline CorrelationReport correlation_report_from_json(const json& j) {
  CorrelationReport r;
  const auto v = j.at("variant").get<std::string>();
  if (v == "pairwise_matrix") {
    r.variant = CorrelationVariant::pairwise_matrix;
  } else if (v == "per_group_mean") {
    r.variant = CorrelationVariant::per_group_mean;
  } else if (v == "distribution") {
    r.variant = CorrelationVariant::distribution;
  } else {
    throw Error(ErrorCode::parse, "unknown report variant '" + v + "'");
  }
  r.names = j.at("names").get<std::vector<std::string>>();
  for (const auto& row : j.at("matrix")) {
    std::vector<double> values;
    for (const auto& x : row) values.push_back(number_from(x));
    r.matrix.push_back(std::move(values));
  }
  for (const auto& f : j.at("failures")) {
    r.failures.push_back({f.at("row").get<std::string>(), f.at("col").get<std::string>(),
                          f.at("message").get<std::string>()});
  }
  for (const auto& g : j.at("groups")) {
    r.groups.push_back(
        {g.at("group").get<std::string>(), g.at("pearson").get<double>(), g.at("num_systems").get<std::size_t>()});
  }
  if (!j.at("mean").is_null()) r.mean = j.at("mean").get<double>();
  for (const auto& d : j.at("distributions")) {
    NamedDistribution nd;
    nd.name = d.at("name").get<std::string>();
    nd.size = d.at("size").get<std::size_t>();
    nd.pair = d.at("pair").get<std::string>();
    nd.excluded = d.at("excluded").get<std::size_t>();
    nd.values = d.at("values").get<std::vector<double>>();
    if (!d.at("summary").is_null()) nd.summary = boxplot_from_json(d.at("summary"));
    r.distributions.push_back(std::move(nd));
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

inline CorrelationReport read_correlation_report(const fs::path& path) {
  try {
    return correlation_report_from_json(json::parse(read_file(path)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, "'" + path.string() + "': " + e.what());
  }
}

/// Square matrix with a leading name column; failed cells are "nan".
inline std::string matrix_to_csv(const CorrelationReport& r) {
  std::ostringstream out;
  out << "metric";
  for (const auto& n : r.names) out << ',' << PlotDataset::csv_field(n);
  out << '\n';
  for (std::size_t i = 0; i < r.matrix.size(); ++i) {
    out << PlotDataset::csv_field(r.names[i]);
    for (double v : r.matrix[i]) out << ',' << fmt::number(v);
    out << '\n';
  }
  return out.str();
}

/// One boxplot row per distribution.
inline std::string distributions_to_csv(const CorrelationReport& r) {
  std::ostringstream out;
  out << "name,size,pair,count,excluded,min,q1,median,q3,max,mean\n";
  for (const auto& d : r.distributions) {
    out << PlotDataset::csv_field(d.name) << ',' << d.size << ',' << PlotDataset::csv_field(d.pair) << ','
        << d.values.size() << ',' << d.excluded;
    if (d.summary) {
      const auto& s = *d.summary;
      for (double v : {s.min, s.q1, s.median, s.q3, s.max, s.mean}) out << ',' << fmt::number(v);
    } else {
      out << ",,,,,,";
    }
    out << '\n';
  }
  return out.str();
}

inline std::string groups_to_csv(const CorrelationReport& r, const std::string& metric, const std::string& score_type) {
  std::ostringstream out;
  for (const auto& g : r.groups) {
    out << PlotDataset::csv_field(score_type) << ',' << PlotDataset::csv_field(metric) << ','
        << PlotDataset::csv_field(g.group) << ',' << fmt::number(g.value) << ',' << g.num_systems << '\n';
  }
  return out.str();
}

inline std::string dataset_to_csv(const PlotDataset& d) {
  std::ostringstream out;
  d.write_csv(out);
  return out.str();
}

}  // namespace mtagg::io

#endif  // MTAGG_IO_RESULTS_HPP_
