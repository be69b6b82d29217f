#ifndef MTAGG_IO_MANIFEST_HPP_
#define MTAGG_IO_MANIFEST_HPP_

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtagg/error.hpp"
#include "mtagg/evaluation_set.hpp"
#include "mtagg/io/text.hpp"
#include "mtagg/parallel.hpp"

namespace mtagg::io {

/// One manifest line. Paths are resolved against the manifest's directory.
struct ManifestRecord {
  std::size_t line = 0;
  EvaluationKey key;
  fs::path hyp_path;
  std::vector<fs::path> ref_paths;
};

namespace detail {

inline std::string required_string(const nlohmann::json& obj, const char* field, std::size_t line) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string() || it->get<std::string>().empty()) {
    throw Error(ErrorCode::parse, "manifest line " + std::to_string(line) + ": missing or empty field '" + field + "'");
  }
  return it->get<std::string>();
}

}  // namespace detail

inline std::vector<ManifestRecord> read_manifest(const fs::path& path) {
  const auto lines = read_lines(path);
  const fs::path base = path.parent_path();
  std::vector<ManifestRecord> records;
  std::map<EvaluationKey, std::size_t> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    if (lines[i].find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(lines[i]);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::parse, "manifest line " + std::to_string(line) + ": " + e.what());
    }
    if (!obj.is_object()) throw Error(ErrorCode::parse, "manifest line " + std::to_string(line) + ": not an object");

    ManifestRecord rec;
    rec.line = line;
    rec.key = {detail::required_string(obj, "dataset_type", line), detail::required_string(obj, "dataset", line),
               detail::required_string(obj, "lang_pair", line), detail::required_string(obj, "system", line)};
    rec.hyp_path = base / detail::required_string(obj, "hyp_path", line);
    auto refs = obj.find("ref_paths");
    if (refs == obj.end() || !refs->is_array() || refs->empty()) {
      throw Error(ErrorCode::parse, "manifest line " + std::to_string(line) + ": 'ref_paths' must be a non-empty list");
    }
    for (const auto& r : *refs) {
      if (!r.is_string()) {
        throw Error(ErrorCode::parse, "manifest line " + std::to_string(line) + ": 'ref_paths' entries must be strings");
      }
      rec.ref_paths.push_back(base / r.get<std::string>());
    }
    if (auto [it, fresh] = seen.emplace(rec.key, line); !fresh) {
      throw Error(ErrorCode::duplicate, "manifest line " + std::to_string(line) + ": system '" + rec.key.str() +
                                            "' already defined on line " + std::to_string(it->second));
    }
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw Error(ErrorCode::empty_evaluation, "manifest '" + path.string() + "' has no records");
  return records;
}

/// Evaluation sets of every manifest record, sorted by key.
inline std::vector<EvaluationSet> load_manifest(const fs::path& path, std::size_t workers = 1) {
  auto records = read_manifest(path);
  std::vector<EvaluationSet> sets(records.size());
  parallel_for(records.size(), workers, [&](std::size_t i) {
    const auto& rec = records[i];
    try {
      sets[i] = EvaluationSet{rec.key, load_parallel(rec.hyp_path, rec.ref_paths)};
    } catch (const Error& e) {
      throw e.with_context("manifest line " + std::to_string(rec.line) + " (" + rec.key.str() + ")");
    }
  });
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return sets;
}

}  // namespace mtagg::io

#endif  // MTAGG_IO_MANIFEST_HPP_
