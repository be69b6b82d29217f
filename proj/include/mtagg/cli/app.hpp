#ifndef MTAGG_CLI_APP_HPP_
#define MTAGG_CLI_APP_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtagg/aggregation.hpp"
#include "mtagg/correlation.hpp"
#include "mtagg/downsample.hpp"
#include "mtagg/error.hpp"
#include "mtagg/evaluation_set.hpp"
#include "mtagg/io/manifest.hpp"
#include "mtagg/io/results.hpp"
#include "mtagg/io/scores_table.hpp"
#include "mtagg/io/text.hpp"
#include "mtagg/metric.hpp"
#include "mtagg/parallel.hpp"
#include "mtagg/report.hpp"
#include "mtagg/version.hpp"

namespace mtagg::cli {

namespace fs = std::filesystem;
using nlohmann::json;

/// Fully resolved settings of one invocation.
struct RunConfig {
  std::string subcommand;
  std::string metric = "both";
  std::string aggregation = "all";
  int n_max = 4;
  int c_max = 6;
  double beta = 2.0;
  std::string smoothing = "exp";
  std::string chrf_averaging = "pooled";
  bool keep_whitespace = false;
  std::uint64_t resamples = 1000;
  std::uint64_t resample_size = 1000;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> sizes{1, 10, 100};
  std::uint64_t repetitions = 1000;
  std::size_t workers = 0;
  std::size_t bins = 20;
  bool signature = false;

  std::string manifest;
  std::string hyp;
  std::vector<std::string> refs;
  std::string system = "system";
  std::string lang_pair = "xx-xx";
  std::string scores;
  std::string external;
  std::string human;
  std::string robustness;
  std::string dataset_type;
  std::string dataset;
  std::string out;

  [[nodiscard]] std::size_t resolved_workers() const { return workers == 0 ? default_workers() : workers; }

  [[nodiscard]] std::vector<MetricSpec> metrics() const {
    BleuMetric bleu{BleuParams{n_max, parse_smoothing(smoothing)}};
    ChrfMetric chrf{ChrfParams{c_max, beta, !keep_whitespace, parse_chrf_averaging(chrf_averaging)}};
    bleu.params.validate();
    chrf.params.validate();
    if (metric == "bleu") return {bleu};
    if (metric == "chrf") return {chrf};
    if (metric == "both") return {bleu, chrf};
    throw Error(ErrorCode::invalid_parameter, "unknown metric '" + metric + "' (expected bleu, chrf or both)");
  }

  [[nodiscard]] ResamplePlan plan() const { return {resamples, resample_size, seed}; }

  [[nodiscard]] std::vector<AggregationMethod> methods() const {
    if (aggregation == "all") {
      return {AggregationMethod::corpus(), AggregationMethod::segment_mean(), AggregationMethod::bootstrap(plan())};
    }
    switch (parse_aggregation_kind(aggregation)) {
      case AggregationKind::corpus: return {AggregationMethod::corpus()};
      case AggregationKind::segment_mean: return {AggregationMethod::segment_mean()};
      case AggregationKind::bootstrap: return {AggregationMethod::bootstrap(plan())};
    }
    return {};
  }

  [[nodiscard]] json to_json() const {
    json j;
    j["subcommand"] = subcommand;
    j["metric"] = metric;
    j["aggregation"] = aggregation;
    j["n_max"] = n_max;
    j["c_max"] = c_max;
    j["beta"] = beta;
    j["smoothing"] = smoothing;
    j["chrf_averaging"] = chrf_averaging;
    j["keep_whitespace"] = keep_whitespace;
    j["resamples"] = resamples;
    j["resample_size"] = resample_size;
    j["seed"] = seed;
    j["sizes"] = sizes;
    j["repetitions"] = repetitions;
    j["bins"] = bins;
    json inputs;
    for (const auto& [k, v] : std::map<std::string, std::string>{{"manifest", manifest},
                                                                   {"hyp", hyp},
                                                                   {"scores", scores},
                                                                   {"external", external},
                                                                   {"human", human},
                                                                   {"robustness", robustness},
                                                                   {"dataset_type", dataset_type},
                                                                   {"dataset", dataset}}) {
      if (!v.empty()) inputs[k] = v;
    }
    if (!refs.empty()) inputs["refs"] = refs;
    j["inputs"] = inputs;
    return j;
  }
};

namespace detail {

inline std::string file_safe(std::string_view name) {
  std::string s;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                    c == '_' || c == '.';
    s += ok ? c : '_';
  }
  return s;
}

/// Context shared by subcommand handlers.
struct Session {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;
  bool failed = false;

  void warn(const std::string& msg) const { err << "warning: " << msg << '\n'; }
  void fail(const std::string& msg) {
    err << "error: " << msg << '\n';
    failed = true;
  }

  void write(const std::string& name, const std::string& content) const {
    io::write_file(fs::path(cfg.out) / name, content);
  }

  void write_run_meta(std::size_t nrefs) const {
    json meta;
    meta["tool"] = "mtagg";
    meta["version"] = std::string(kVersion);
    meta["config"] = cfg.to_json();
    json sigs;
    for (const auto& m : cfg.metrics()) sigs[std::string(to_string(metric_id(m)))] = signature(m, nrefs);
    meta["signatures"] = sigs;
    write("run_meta.json", meta.dump(2) + "\n");
  }
};

inline bool keep_set(const RunConfig& cfg, const EvaluationKey& key) {
  return (cfg.dataset_type.empty() || key.dataset_type == cfg.dataset_type) &&
         (cfg.dataset.empty() || key.dataset == cfg.dataset);
}

/// Systems from --manifest or from a single --hyp/--ref pair.
inline std::vector<EvaluationSet> load_systems(const RunConfig& cfg) {
  std::vector<EvaluationSet> sets;
  if (!cfg.manifest.empty()) {
    if (!cfg.hyp.empty()) throw Error(ErrorCode::invalid_parameter, "give either --manifest or --hyp, not both");
    sets = io::load_manifest(cfg.manifest, cfg.resolved_workers());
  } else if (!cfg.hyp.empty()) {
    if (cfg.refs.empty()) throw Error(ErrorCode::invalid_parameter, "--hyp needs at least one --ref");
    std::vector<fs::path> refs(cfg.refs.begin(), cfg.refs.end());
    EvaluationKey key{"local", "local", cfg.lang_pair, cfg.system};
    try {
      sets.push_back({key, io::load_parallel(cfg.hyp, refs)});
    } catch (const Error& e) {
      throw e.with_context("system '" + key.str() + "'");
    }
  } else {
    throw Error(ErrorCode::invalid_parameter, "no input: give --manifest or --hyp/--ref");
  }
  std::erase_if(sets, [&](const auto& s) { return !keep_set(cfg, s.key); });
  if (sets.empty()) throw Error(ErrorCode::empty_evaluation, "no systems left after filtering");
  return sets;
}

inline std::size_t max_refs(const std::vector<EvaluationSet>& sets) {
  std::size_t n = 1;
  for (const auto& s : sets) {
    for (const auto& seg : s.segments) n = std::max(n, seg.references().size());
  }
  return n;
}

/// Scores every system under every selected metric and aggregation. A
/// failing system is reported and skipped; the others are still scored.
inline std::vector<io::ScoredSystem> score_systems(Session& s, const std::vector<EvaluationSet>& sets) {
  const auto metrics = s.cfg.metrics();
  const auto methods = s.cfg.methods();
  const std::size_t workers = s.cfg.resolved_workers();
  // Parallelize across systems when there are enough of them, otherwise
  // inside each system; results do not depend on the choice.
  const bool outer = sets.size() >= workers;
  std::vector<std::vector<io::ScoredSystem>> per_system(sets.size());
  std::vector<std::string> errors(sets.size());
  auto run = [&](std::size_t i, std::size_t inner) {
    try {
      for (const auto& metric : metrics) {
        std::visit(
            [&](const auto& m) {
              using M = std::decay_t<decltype(m)>;
              const PreparedCorpus<M> corpus(m, sets[i].segments, inner);
              for (const auto& method : methods) per_system[i].push_back({sets[i].key, aggregate(corpus, method, inner)});
            },
            metric);
      }
    } catch (const Error& e) {
      per_system[i].clear();
      errors[i] = "system '" + sets[i].key.str() + "': " + e.what();
    }
  };
  if (outer) {
    parallel_for(sets.size(), workers, [&](std::size_t i) { run(i, 1); });
  } else {
    for (std::size_t i = 0; i < sets.size(); ++i) run(i, workers);
  }
  std::vector<io::ScoredSystem> all;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!errors[i].empty()) s.fail(errors[i]);
    all.insert(all.end(), per_system[i].begin(), per_system[i].end());
  }
  return all;
}

/// System scores from --scores (a scores.jsonl) or computed from inputs.
inline std::vector<io::ScoredSystem> obtain_scores(Session& s) {
  if (!s.cfg.scores.empty()) {
    auto scores = io::read_scores_jsonl(s.cfg.scores);
    std::erase_if(scores, [&](const auto& x) { return !keep_set(s.cfg, x.key); });
    return scores;
  }
  return score_systems(s, load_systems(s.cfg));
}

/// Score vectors per variant name, labelled by `label_of(key)`.
template <class LabelFn>
std::map<std::string, std::pair<std::vector<std::string>, std::vector<double>>> group_variants(
    const std::vector<io::ScoredSystem>& scores, LabelFn label_of) {
  std::map<std::string, std::pair<std::vector<std::string>, std::vector<double>>> out;
  for (const auto& sc : scores) {
    auto& [labels, values] = out[io::variant_name(sc.score)];
    labels.push_back(label_of(sc.key));
    values.push_back(sc.score.value);
  }
  return out;
}

/// Variant names in the conventional display order, then any others.
inline std::vector<std::string> ordered_variants(const std::vector<io::ScoredSystem>& scores) {
  std::vector<std::string> seen;
  for (const auto& sc : scores) {
    const auto v = io::variant_name(sc.score);
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  }
  static const std::vector<std::string> canonical{"bleu", "x-bleu", "m-bleu", "chrf", "x-chrf", "m-chrf"};
  std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
    auto rank = [](const std::string& v) {
      auto it = std::find(canonical.begin(), canonical.end(), v);
      return static_cast<std::size_t>(it - canonical.begin());
    };
    return rank(a) < rank(b);
  });
  return seen;
}

inline PlotDataset histogram_for(std::span<const double> values, std::size_t bins, const std::string& series) {
  double lo = 0.0, hi = 1.0;
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  if (*mn < 0.0 || *mx > 1.0) {
    lo = *mn;
    hi = *mx > *mn ? *mx : *mn + 1.0;
  }
  return emit_histogram(values, bins, series, lo, hi);
}

// ---- subcommands ---------------------------------------------------------

inline void cmd_score(Session& s) {
  const auto sets = load_systems(s.cfg);
  const auto scores = score_systems(s, sets);
  if (s.cfg.out.empty()) {
    s.out << io::scores_to_csv(scores);
    return;
  }
  s.write("scores.jsonl", io::scores_to_jsonl(scores));
  s.write("scores.csv", io::scores_to_csv(scores));
  s.write_run_meta(max_refs(sets));
}

inline void cmd_matrix(Session& s) {
  if (s.cfg.out.empty()) throw Error(ErrorCode::invalid_parameter, "matrix needs --out");
  const auto scores = obtain_scores(s);
  const bool with_external = !s.cfg.external.empty();
  // External tables identify systems by language pair and name only.
  auto label_of = [&](const EvaluationKey& k) { return with_external ? k.lang_pair + "/" + k.system : k.str(); };

  auto grouped = group_variants(scores, label_of);
  std::vector<std::pair<std::string, ScoreVector>> vectors;
  for (const auto& name : ordered_variants(scores)) {
    auto& [labels, values] = grouped.at(name);
    vectors.emplace_back(name, ScoreVector(labels, values));
  }
  if (with_external) {
    const auto records = io::load_scores_table(s.cfg.external, io::TableKind::external);
    for (const auto& label : io::labels_of(records)) {
      std::vector<std::string> labels;
      std::vector<double> values;
      for (const auto& r : records) {
        if (r.label != label) continue;
        labels.push_back(r.lang_pair + "/" + r.system);
        values.push_back(r.value);
      }
      vectors.emplace_back(label, ScoreVector(labels, values));
    }
  }
  if (vectors.size() < 2) throw Error(ErrorCode::invalid_parameter, "matrix needs at least two score vectors");

  // Restrict every vector to the systems all of them cover.
  std::vector<std::string> common = vectors.front().second.labels();
  std::sort(common.begin(), common.end());
  for (const auto& [name, v] : vectors) {
    std::erase_if(common, [&](const std::string& l) { return !v.contains(l); });
  }
  for (auto& [name, v] : vectors) {
    if (v.size() != common.size()) {
      s.warn(name + ": " + std::to_string(v.size() - common.size()) + " system(s) not covered by every vector dropped");
    }
    v = ScoreVector(common, v.aligned_to(common));
  }

  const auto report = pairwise_matrix(vectors);
  for (const auto& f : report.failures) s.warn("pair " + f.row + " ~ " + f.col + ": " + f.message);

  s.write("matrix.csv", io::matrix_to_csv(report));
  s.write("correlation.json", io::to_json(report).dump(2) + "\n");
  if (!report.failures.empty()) {
    std::ostringstream f;
    f << "row,col,message\n";
    for (const auto& x : report.failures) {
      f << PlotDataset::csv_field(x.row) << ',' << PlotDataset::csv_field(x.col) << ','
        << PlotDataset::csv_field(x.message) << '\n';
    }
    s.write("matrix_failures.csv", f.str());
  }
  for (const auto& [name, v] : vectors) {
    if (v.size() == 0) continue;
    s.write("histogram_" + file_safe(name) + ".csv",
            io::dataset_to_csv(histogram_for(v.values(), s.cfg.bins, name)));
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const auto& [a, va] = vectors[i];
      const auto& [b, vb] = vectors[j];
      s.write("scatter_" + file_safe(a) + "__" + file_safe(b) + ".csv",
              io::dataset_to_csv(emit_scatter(va.labels(), va.values(), vb.aligned_to(va.labels()), a, b)));
    }
  }
  s.write_run_meta(1);
}

inline void cmd_robustness(Session& s) {
  const auto sets = load_systems(s.cfg);
  DownsampleStudySpec spec;
  spec.sizes = s.cfg.sizes;
  spec.repetitions = s.cfg.repetitions;
  spec.seed = s.cfg.seed;
  spec.reference_plan = s.cfg.plan();

  std::ostringstream csv;
  csv << "metric,name,size,pair,count,excluded,min,q1,median,q3,max,mean\n";
  for (const auto& metric : s.cfg.metrics()) {
    const std::string name(to_string(metric_id(metric)));
    const auto report = downsample_study(sets, spec, metric, s.cfg.resolved_workers());
    for (const auto& w : report.warnings) s.warn(name + ": " + w);
    std::istringstream rows(io::distributions_to_csv(report));
    std::string line;
    std::getline(rows, line);  // header
    while (std::getline(rows, line)) csv << name << ',' << line << '\n';
    if (!s.cfg.out.empty()) s.write("robustness_" + name + ".json", io::to_json(report).dump(2) + "\n");
  }
  if (s.cfg.out.empty()) {
    s.out << csv.str();
    return;
  }
  s.write("robustness.csv", csv.str());
  s.write_run_meta(max_refs(sets));
}

inline void cmd_humancorr(Session& s) {
  if (s.cfg.human.empty()) throw Error(ErrorCode::invalid_parameter, "humancorr needs --human");
  const auto human = io::load_scores_table(s.cfg.human, io::TableKind::human);
  const auto scores = obtain_scores(s);

  // metric name -> language pair -> scores labelled by system
  std::vector<std::pair<std::string, std::map<std::string, ScoreVector>>> metrics;
  {
    std::map<std::string, std::map<std::string, std::pair<std::vector<std::string>, std::vector<double>>>> acc;
    for (const auto& sc : scores) {
      auto& [labels, values] = acc[io::variant_name(sc.score)][sc.key.lang_pair];
      if (std::find(labels.begin(), labels.end(), sc.key.system) != labels.end()) {
        throw Error(ErrorCode::duplicate, "system '" + sc.key.system + "' appears more than once for " +
                                              sc.key.lang_pair + "; filter with --dataset-type/--dataset");
      }
      labels.push_back(sc.key.system);
      values.push_back(sc.score.value);
    }
    for (const auto& name : ordered_variants(scores)) {
      std::map<std::string, ScoreVector> by_lp;
      for (auto& [lp, lv] : acc.at(name)) by_lp.emplace(lp, ScoreVector(lv.first, lv.second));
      metrics.emplace_back(name, std::move(by_lp));
    }
  }
  if (!s.cfg.external.empty()) {
    const auto ext = io::load_scores_table(s.cfg.external, io::TableKind::external);
    for (const auto& label : io::labels_of(ext)) metrics.emplace_back(label, io::by_lang_pair(ext, label));
  }

  std::ostringstream groups_csv, ranking_csv;
  groups_csv << "score_type,metric,lang_pair,pearson,num_systems\n";
  ranking_csv << "score_type,rank,metric,mean,groups\n";
  json all = json::object();
  for (const auto& type : io::labels_of(human)) {
    const auto human_by_lp = io::by_lang_pair(human, type);
    std::map<std::string, CorrelationReport> reports;
    for (const auto& [name, by_lp] : metrics) {
      auto rep = human_correlation(by_lp, human_by_lp);
      if (!rep.warnings.empty()) {
        std::string detail;
        for (const auto& w : rep.warnings) detail += (detail.empty() ? "" : "; ") + w;
        s.warn(type + "/" + name + ": " + std::to_string(rep.warnings.size()) + " language pair(s) skipped (" +
               detail + ")");
      }
      groups_csv << io::groups_to_csv(rep, name, type);
      all[type][name] = io::to_json(rep);
      reports.emplace(name, std::move(rep));
    }
    const auto ranked = rank_by_mean(reports);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      ranking_csv << type << ',' << i + 1 << ',' << PlotDataset::csv_field(ranked[i].metric) << ','
                  << fmt::number(ranked[i].mean) << ',' << ranked[i].groups << '\n';
    }
  }
  if (s.cfg.out.empty()) {
    s.out << ranking_csv.str();
    return;
  }
  s.write("humancorr_groups.csv", groups_csv.str());
  s.write("humancorr_ranking.csv", ranking_csv.str());
  s.write("humancorr.json", all.dump(2) + "\n");
  s.write_run_meta(1);
}

inline void cmd_report(Session& s) {
  if (s.cfg.scores.empty() && s.cfg.robustness.empty()) {
    throw Error(ErrorCode::invalid_parameter, "report needs --scores and/or --robustness");
  }
  std::ostringstream summary;
  if (!s.cfg.scores.empty()) {
    auto scores = io::read_scores_jsonl(s.cfg.scores);
    std::erase_if(scores, [&](const auto& x) { return !keep_set(s.cfg, x.key); });
    if (scores.empty()) throw Error(ErrorCode::empty_evaluation, "no scores in '" + s.cfg.scores + "'");
    const auto grouped = group_variants(scores, [](const EvaluationKey& k) { return k.str(); });
    std::ostringstream box;
    box << "label,min,q1,median,q3,max,mean,count\n";
    summary << "variant  systems  mean  median  min  max\n";
    for (const auto& name : ordered_variants(scores)) {
      const auto& values = grouped.at(name).second;
      const auto b = summarize(values);
      summary << name << "  " << b.count << "  " << fmt::number(b.mean) << "  " << fmt::number(b.median) << "  "
              << fmt::number(b.min) << "  " << fmt::number(b.max) << '\n';
      box << PlotDataset::csv_field(name);
      for (double v : {b.min, b.q1, b.median, b.q3, b.max, b.mean}) box << ',' << fmt::number(v);
      box << ',' << b.count << '\n';
      if (!s.cfg.out.empty()) {
        s.write("histogram_" + file_safe(name) + ".csv", io::dataset_to_csv(histogram_for(values, s.cfg.bins, name)));
      }
    }
    if (!s.cfg.out.empty()) s.write("boxplot_scores.csv", box.str());
  }
  if (!s.cfg.robustness.empty()) {
    const auto rep = io::read_correlation_report(s.cfg.robustness);
    summary << "\ndistribution  count  excluded  median  mean\n";
    for (const auto& d : rep.distributions) {
      summary << d.name << "  " << d.values.size() << "  " << d.excluded << "  "
              << (d.summary ? fmt::number(d.summary->median) : "nan") << "  "
              << (d.summary ? fmt::number(d.summary->mean) : "nan") << '\n';
    }
    if (!s.cfg.out.empty()) s.write("boxplot_robustness.csv", io::distributions_to_csv(rep));
  }
  if (s.cfg.out.empty()) {
    s.out << summary.str();
  } else {
    s.write("summary.txt", summary.str());
  }
}

inline void print_signatures(Session& s) {
  const std::size_t nrefs = std::max<std::size_t>(1, s.cfg.refs.size());
  const auto methods = s.cfg.methods();
  for (const auto& m : s.cfg.metrics()) {
    for (const auto& method : methods) {
      const std::string name(to_string(metric_id(m)));
      s.out << io::variant_name(metric_id(m), method.kind()) << ": " << signature(m, nrefs) << method.signature()
            << '\n';
    }
  }
}

inline void add_common_options(CLI::App& sub, RunConfig& cfg) {
  sub.set_config("--config", "", "read options from a TOML/INI file; flags override it");
  sub.option_defaults()->group("Common options");
  sub.add_option("--metric", cfg.metric, "bleu, chrf or both")
      ->check(CLI::IsMember({"bleu", "chrf", "both"}))
      ->capture_default_str();
  sub.add_option("--n-max", cfg.n_max, "BLEU maximum n-gram order")->capture_default_str();
  sub.add_option("--c-max", cfg.c_max, "chrF maximum character n-gram order")->capture_default_str();
  sub.add_option("--beta", cfg.beta, "chrF recall weight")->capture_default_str();
  sub.add_option("--smoothing", cfg.smoothing, "BLEU smoothing: exp or none")
      ->check(CLI::IsMember({"exp", "none"}))
      ->capture_default_str();
  sub.add_option("--chrf-averaging", cfg.chrf_averaging, "pooled or per-order-f")
      ->check(CLI::IsMember({"pooled", "per-order-f"}))
      ->capture_default_str();
  sub.add_flag("--keep-whitespace", cfg.keep_whitespace, "count whitespace in chrF character n-grams");
  sub.add_option("-B,--resamples", cfg.resamples, "bootstrap resamples")->capture_default_str();
  sub.add_option("-S,--resample-size", cfg.resample_size, "segments per bootstrap resample")->capture_default_str();
  sub.add_option("--seed", cfg.seed, "seed of every random draw")->envname("MTAGG_SEED")->capture_default_str();
  sub.add_option("--workers", cfg.workers, "worker threads (0 = all cores)")
      ->envname("MTAGG_WORKERS")
      ->capture_default_str();
  sub.add_option("--manifest", cfg.manifest, "JSONL manifest of system outputs");
  sub.add_option("--hyp", cfg.hyp, "hypothesis file (single system)");
  sub.add_option("--ref", cfg.refs, "reference file; repeat for several references");
  sub.add_option("--system", cfg.system, "system name used with --hyp")->capture_default_str();
  sub.add_option("--lang-pair", cfg.lang_pair, "language pair used with --hyp")->capture_default_str();
  sub.add_option("--dataset-type", cfg.dataset_type, "only systems of this dataset type");
  sub.add_option("--dataset", cfg.dataset, "only systems of this dataset");
  sub.add_option("--out", cfg.out, "output directory");
  sub.add_flag("--signature", cfg.signature, "print the resolved metric signatures and exit");
}

}  // namespace detail

/// Runs the command line; returns the process exit status.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Corpus-level, segment-level and bootstrap aggregation of MT metrics", "mtagg"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  detail::add_common_options(app, cfg);
  app.option_defaults()->group("Options");

  auto* score = app.add_subcommand("score", "score systems under each metric and aggregation");
  score->add_option("--agg", cfg.aggregation, "corpus, segment, bootstrap or all")
      ->check(CLI::IsMember({"corpus", "segment", "bootstrap", "all"}))
      ->capture_default_str();

  auto* matrix = app.add_subcommand("matrix", "pairwise correlations between metric variants");
  matrix->add_option("--agg", cfg.aggregation, "corpus, segment, bootstrap or all")
      ->check(CLI::IsMember({"corpus", "segment", "bootstrap", "all"}))
      ->capture_default_str();
  matrix->add_option("--scores", cfg.scores, "scores.jsonl from a previous score run");
  matrix->add_option("--external", cfg.external, "CSV of external metric scores");
  matrix->add_option("--bins", cfg.bins, "histogram bins")->capture_default_str();

  auto* robustness = app.add_subcommand("robustness", "correlations of downsampled test sets");
  robustness->add_option("--sizes", cfg.sizes, "downsampled test set sizes")->delimiter(',')->capture_default_str();
  robustness->add_option("--repetitions", cfg.repetitions, "draws per size")->capture_default_str();

  auto* humancorr = app.add_subcommand("humancorr", "correlation with human judgments per language pair");
  humancorr->add_option("--agg", cfg.aggregation, "corpus, segment, bootstrap or all")
      ->check(CLI::IsMember({"corpus", "segment", "bootstrap", "all"}))
      ->capture_default_str();
  humancorr->add_option("--scores", cfg.scores, "scores.jsonl from a previous score run");
  humancorr->add_option("--human", cfg.human, "CSV of human scores (mqm, da)");
  humancorr->add_option("--external", cfg.external, "CSV of external metric scores");

  auto* report = app.add_subcommand("report", "plot data and a summary of earlier runs");
  report->add_option("--scores", cfg.scores, "scores.jsonl from a score run");
  report->add_option("--robustness", cfg.robustness, "robustness_<metric>.json from a robustness run");
  report->add_option("--bins", cfg.bins, "histogram bins")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    sub->footer("Metric, resampling, input and output options are shared by all subcommands; see mtagg --help.");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  detail::Session session{cfg, out, err};
  try {
    if (cfg.bins < 1) throw Error(ErrorCode::invalid_parameter, "--bins must be >= 1");
    if (cfg.signature) {
      detail::print_signatures(session);
      return 0;
    }
    if (cfg.subcommand == "score") detail::cmd_score(session);
    if (cfg.subcommand == "matrix") detail::cmd_matrix(session);
    if (cfg.subcommand == "robustness") detail::cmd_robustness(session);
    if (cfg.subcommand == "humancorr") detail::cmd_humancorr(session);
    if (cfg.subcommand == "report") detail::cmd_report(session);
  } catch (const Error& e) {
    session.fail(e.what());
  } catch (const std::exception& e) {
    session.fail(e.what());
  }
  return session.failed ? 1 : 0;
}

}  // namespace mtagg::cli

#endif  // MTAGG_CLI_APP_HPP_
