#ifndef MTAGG_TESTS_GOLDEN_HPP_
#define MTAGG_TESTS_GOLDEN_HPP_

// Loader for the frozen reference-scorer outputs in tests/data (produced by
// tools/make_goldens.py).

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef MTAGG_TEST_DATA_DIR
#error "MTAGG_TEST_DATA_DIR must be defined"
#endif

namespace mtagg::fixtures {

inline std::string data_path(const std::string& name) { return std::string(MTAGG_TEST_DATA_DIR) + "/" + name; }

struct GoldenSegment {
  int id = 0;
  std::string lang;
  std::string kind;
  std::string hyp;
  std::string ref;
  std::vector<std::string> hyp_tokens;
  std::vector<std::string> ref_tokens;
  // [hyp_len, ref_len, correct_1..4, total_1..4]
  std::vector<std::uint64_t> bleu_stats;
  // [hyp, ref, match] per order 1..6
  std::vector<std::uint64_t> chrf_stats;
  double sentence_bleu = 0;
  double sentence_chrf = 0;
};

inline std::vector<GoldenSegment> load_golden_suite() {
  std::ifstream in(data_path("golden_suite.jsonl"));
  if (!in) throw std::runtime_error("missing golden_suite.jsonl");
  std::vector<GoldenSegment> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    GoldenSegment g;
    g.id = j.at("id");
    g.lang = j.at("lang");
    g.kind = j.at("kind");
    g.hyp = j.at("hyp");
    g.ref = j.at("ref");
    g.hyp_tokens = j.at("hyp_tokens").get<std::vector<std::string>>();
    g.ref_tokens = j.at("ref_tokens").get<std::vector<std::string>>();
    g.bleu_stats = j.at("bleu_stats").get<std::vector<std::uint64_t>>();
    g.chrf_stats = j.at("chrf_stats").get<std::vector<std::uint64_t>>();
    g.sentence_bleu = j.at("sentence_bleu");
    g.sentence_chrf = j.at("sentence_chrf");
    out.push_back(std::move(g));
  }
  return out;
}

inline nlohmann::json load_golden_corpus() {
  std::ifstream in(data_path("golden_corpus.json"));
  if (!in) throw std::runtime_error("missing golden_corpus.json");
  return nlohmann::json::parse(in);
}

}  // namespace mtagg::fixtures

#endif  // MTAGG_TESTS_GOLDEN_HPP_
