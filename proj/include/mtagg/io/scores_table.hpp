#ifndef MTAGG_IO_SCORES_TABLE_HPP_
#define MTAGG_IO_SCORES_TABLE_HPP_

#include <cctype>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mtagg/correlation.hpp"
#include "mtagg/error.hpp"
#include "mtagg/format.hpp"
#include "mtagg/io/text.hpp"

namespace mtagg::io {

/// Split one CSV record. Fields may be double-quoted; a doubled quote
/// inside a quoted field is a literal quote.
inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw Error(ErrorCode::parse, "unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

/// A header-addressed CSV table.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;  // file line of each row

  [[nodiscard]] std::optional<std::size_t> find_column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  }
};

inline CsvTable read_csv(const fs::path& path) {
  const auto lines = read_lines(path);
  CsvTable t;
  bool have_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = split_csv_line(lines[i]);
    } catch (const Error& e) {
      throw e.with_context("'" + path.string() + "' line " + std::to_string(i + 1));
    }
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw Error(ErrorCode::parse, "'" + path.string() + "' line " + std::to_string(i + 1) + ": expected " +
                                        std::to_string(t.header.size()) + " fields, found " +
                                        std::to_string(fields.size()));
    }
    t.rows.push_back(std::move(fields));
    t.row_lines.push_back(i + 1);
  }
  if (!have_header) throw Error(ErrorCode::empty_evaluation, "'" + path.string() + "' is empty");
  return t;
}

enum class TableKind { human, external };

/// One score per (system, language pair, label). The label is the human
/// score type ("mqm", "da") or the external metric name.
struct ScoreRecord {
  std::string system;
  std::string lang_pair;
  std::string label;
  double value = 0;
};

/// Reads a score table with columns system, lang_pair, score_type (human)
/// or metric (external), and value. Other columns are ignored.
inline std::vector<ScoreRecord> load_scores_table(const fs::path& path, TableKind kind) {
  const CsvTable t = read_csv(path);
  const char* label_col = kind == TableKind::human ? "score_type" : "metric";
  auto col = [&](const char* name) {
    auto c = t.find_column(name);
    if (!c) throw Error(ErrorCode::parse, "'" + path.string() + "': missing column '" + name + "'");
    return *c;
  };
  const std::size_t c_sys = col("system"), c_lp = col("lang_pair"), c_label = col(label_col), c_val = col("value");

  std::vector<ScoreRecord> out;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const std::string where = "'" + path.string() + "' row " + std::to_string(t.row_lines[r]);
    ScoreRecord rec{row[c_sys], row[c_lp], row[c_label], 0.0};
    if (rec.system.empty() || rec.lang_pair.empty() || rec.label.empty()) {
      throw Error(ErrorCode::parse, where + ": empty key field");
    }
    if (kind == TableKind::human) {
      for (auto& ch : rec.label) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      if (rec.label != "mqm" && rec.label != "da") {
        throw Error(ErrorCode::parse, where + ": unknown score_type '" + row[c_label] + "' (expected mqm or da)");
      }
    }
    try {
      rec.value = fmt::parse_number(row[c_val]);
    } catch (const Error& e) {
      throw e.with_context(where);
    }
    if (!std::isfinite(rec.value)) throw Error(ErrorCode::parse, where + ": value is not finite");
    if (!seen.emplace(rec.system, rec.lang_pair, rec.label).second) {
      throw Error(ErrorCode::duplicate, where + ": duplicate entry for system '" + rec.system + "', '" +
                                            rec.lang_pair + "', '" + rec.label + "'");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

/// Groups records with the given label into per-language-pair score vectors.
inline std::map<std::string, ScoreVector> by_lang_pair(const std::vector<ScoreRecord>& records,
                                                       std::string_view label) {
  std::map<std::string, std::pair<std::vector<std::string>, std::vector<double>>> acc;
  for (const auto& r : records) {
    if (r.label != label) continue;
    auto& [names, values] = acc[r.lang_pair];
    names.push_back(r.system);
    values.push_back(r.value);
  }
  std::map<std::string, ScoreVector> out;
  for (auto& [lp, nv] : acc) out.emplace(lp, ScoreVector(std::move(nv.first), std::move(nv.second)));
  return out;
}

/// Distinct labels in first-appearance order.
inline std::vector<std::string> labels_of(const std::vector<ScoreRecord>& records) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& r : records) {
    if (seen.insert(r.label).second) out.push_back(r.label);
  }
  return out;
}

}  // namespace mtagg::io

#endif  // MTAGG_IO_SCORES_TABLE_HPP_
