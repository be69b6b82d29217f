#ifndef MTAGG_NGRAMS_HPP_
#define MTAGG_NGRAMS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mtagg/error.hpp"
#include "mtagg/tokenizer.hpp"
#include "mtagg/unicode.hpp"

namespace mtagg {

/// Multiset of n-grams of a single order. Word n-gram keys are tokens joined
/// by kNgramSeparator; character n-gram keys are the UTF-8 window itself.
struct NGramMultiset {
  int order = 1;
  std::unordered_map<std::string, std::uint32_t> counts;

  [[nodiscard]] std::uint64_t total() const noexcept {
    std::uint64_t sum = 0;
    for (const auto& [_, c] : counts) sum += c;
    return sum;
  }

  [[nodiscard]] std::uint32_t count(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
  }

  [[nodiscard]] bool empty() const noexcept { return counts.empty(); }
};

namespace detail {

inline void check_order(int order) {
  if (order < 1) {
    throw Error(ErrorCode::invalid_parameter, "n-gram order must be >= 1, got " + std::to_string(order));
  }
}

}  // namespace detail

inline NGramMultiset word_ngrams(const TokenSequence& tokens, int order) {
  detail::check_order(order);
  NGramMultiset out{order, {}};
  const std::size_t n = static_cast<std::size_t>(order);
  if (tokens.size() < n) return out;
  out.counts.reserve(tokens.size() - n + 1);
  std::string key;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    key.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (k) key.push_back(kNgramSeparator);
      key += tokens[i + k];
    }
    ++out.counts[key];
  }
  return out;
}

/// Orders 1..max_order; element k holds order k+1.
inline std::vector<NGramMultiset> word_ngrams_upto(const TokenSequence& tokens, int max_order) {
  detail::check_order(max_order);
  std::vector<NGramMultiset> out;
  out.reserve(static_cast<std::size_t>(max_order));
  for (int n = 1; n <= max_order; ++n) out.push_back(word_ngrams(tokens, n));
  return out;
}

namespace detail {

inline std::u32string char_ngram_source(std::string_view text, bool strip_whitespace) {
  std::u32string cps = unicode::decode(text);
  if (strip_whitespace) std::erase_if(cps, unicode::is_space);
  return cps;
}

inline NGramMultiset char_ngrams_of(const std::u32string& cps, int order) {
  NGramMultiset out{order, {}};
  const std::size_t n = static_cast<std::size_t>(order);
  if (cps.size() < n) return out;
  out.counts.reserve(cps.size() - n + 1);
  std::string key;
  for (std::size_t i = 0; i + n <= cps.size(); ++i) {
    key.clear();
    for (std::size_t k = 0; k < n; ++k) unicode::append_utf8(key, cps[i + k]);
    ++out.counts[key];
  }
  return out;
}

}  // namespace detail

/// Character n-grams over unicode scalar values. With strip_whitespace every
/// whitespace character is deleted before windowing.
inline NGramMultiset char_ngrams(std::string_view text, int order, bool strip_whitespace = true) {
  detail::check_order(order);
  return detail::char_ngrams_of(detail::char_ngram_source(text, strip_whitespace), order);
}

inline std::vector<NGramMultiset> char_ngrams_upto(std::string_view text, int max_order,
                                                   bool strip_whitespace = true) {
  detail::check_order(max_order);
  const std::u32string cps = detail::char_ngram_source(text, strip_whitespace);
  std::vector<NGramMultiset> out;
  out.reserve(static_cast<std::size_t>(max_order));
  for (int n = 1; n <= max_order; ++n) out.push_back(detail::char_ngrams_of(cps, n));
  return out;
}

}  // namespace mtagg

#endif  // MTAGG_NGRAMS_HPP_
