#ifndef MTAGG_IO_TEXT_HPP_
#define MTAGG_IO_TEXT_HPP_

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "mtagg/error.hpp"
#include "mtagg/segment.hpp"
#include "mtagg/unicode.hpp"

namespace mtagg::io {

namespace fs = std::filesystem;

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path.string() + "'");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::io, "cannot read '" + path.string() + "'");
  return data;
}

/// Writes atomically enough for a batch tool: the whole buffer in one stream.
inline void write_file(const fs::path& path, std::string_view data) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot write '" + path.string() + "'");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::io, "cannot write '" + path.string() + "'");
}

/// Lines of a UTF-8 text file. A final newline does not start a new line
/// and a trailing carriage return is removed from every line.
inline std::vector<std::string> read_lines(const fs::path& path) {
  const std::string data = read_file(path);
  if (auto bad = unicode::find_invalid_utf8(data)) {
    throw Error(ErrorCode::decode, "'" + path.string() + "': invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < data.size()) {
    std::size_t end = data.find('\n', start);
    if (end == std::string::npos) end = data.size();
    std::string_view line(data.data() + start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

/// One segment per line, ids are 1-based line numbers.
inline std::vector<Segment> load_parallel(const fs::path& hyp_path, const std::vector<fs::path>& ref_paths) {
  if (ref_paths.empty()) throw Error(ErrorCode::invalid_parameter, "no reference files given");
  const auto hyps = read_lines(hyp_path);
  std::vector<std::vector<std::string>> refs;
  for (const auto& p : ref_paths) {
    refs.push_back(read_lines(p));
    if (refs.back().size() != hyps.size()) {
      throw Error(ErrorCode::alignment, "'" + hyp_path.string() + "' has " + std::to_string(hyps.size()) +
                                            " lines but '" + p.string() + "' has " +
                                            std::to_string(refs.back().size()));
    }
  }
  if (hyps.empty()) throw Error(ErrorCode::empty_evaluation, "'" + hyp_path.string() + "' is empty");

  std::vector<Segment> out;
  out.reserve(hyps.size());
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    std::vector<std::string> r;
    r.reserve(refs.size());
    for (const auto& f : refs) r.push_back(f[i]);
    out.emplace_back(hyps[i], std::move(r), std::to_string(i + 1));
  }
  return out;
}

}  // namespace mtagg::io

#endif  // MTAGG_IO_TEXT_HPP_
