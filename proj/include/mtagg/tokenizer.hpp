#ifndef MTAGG_TOKENIZER_HPP_
#define MTAGG_TOKENIZER_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtagg/error.hpp"
#include "mtagg/unicode.hpp"

namespace mtagg {

/// Joins tokens inside n-gram keys. It is whitespace, so the tokenizer can
/// never emit it inside a token.
inline constexpr char kNgramSeparator = '\x1f';

/// A tokenized sentence. Tokens are non-empty and never contain
/// kNgramSeparator (it is stripped from caller-supplied tokens).
class TokenSequence {
 public:
  TokenSequence() = default;

  explicit TokenSequence(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    for (auto& tok : tokens_) {
      std::erase(tok, kNgramSeparator);
      if (tok.empty()) throw Error(ErrorCode::invalid_parameter, "empty token");
    }
  }

  [[nodiscard]] const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  [[nodiscard]] std::size_t size() const noexcept { return tokens_.size(); }
  [[nodiscard]] bool empty() const noexcept { return tokens_.empty(); }
  [[nodiscard]] const std::string& operator[](std::size_t i) const { return tokens_[i]; }
  [[nodiscard]] auto begin() const noexcept { return tokens_.begin(); }
  [[nodiscard]] auto end() const noexcept { return tokens_.end(); }

  [[nodiscard]] std::string joined(char sep = ' ') const {
    std::string out;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (i) out.push_back(sep);
      out += tokens_[i];
    }
    return out;
  }

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;

 private:
  struct Trusted {};
  TokenSequence(Trusted, std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}
  friend TokenSequence split_whitespace(std::u32string_view text);

  std::vector<std::string> tokens_;
};

/// Splits on runs of unicode::is_space characters, dropping empty pieces.
inline TokenSequence split_whitespace(std::u32string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t cp : text) {
    if (unicode::is_space(cp)) {
      if (!current.empty()) tokens.push_back(std::exchange(current, {}));
    } else {
      unicode::append_utf8(current, cp);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return TokenSequence(TokenSequence::Trusted{}, std::move(tokens));
}

namespace detail {

inline void replace_all(std::u32string& s, std::u32string_view from, std::u32string_view to) {
  if (s.find(from) == std::u32string::npos) return;
  std::u32string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  for (std::size_t hit; (hit = s.find(from, pos)) != std::u32string::npos; pos = hit + from.size()) {
    out.append(s, pos, hit - pos);
    out.append(to);
  }
  out.append(s, pos);
  s = std::move(out);
}

// ASCII symbols split off unconditionally: space to '&', '(' to '+', '/',
// ':' to '@', '[' to '`', '{' to '~'. Apostrophe, comma, hyphen and period
// are handled by the context rules.
constexpr bool is_13a_symbol(char32_t c) noexcept {
  return (c >= 0x20 && c <= 0x26) || (c >= 0x28 && c <= 0x2B) || c == 0x2F ||
         (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
}

constexpr bool is_period_or_comma(char32_t c) noexcept { return c == U'.' || c == U','; }

// Each pass below is a single left-to-right scan over non-overlapping
// two-character windows; a character consumed as the second half of a match
// cannot start the next one.

// "x." -> "x . " when x is not a digit
inline std::u32string split_after_nondigit(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size() * 2);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && !unicode::is_ascii_digit(s[i]) && is_period_or_comma(s[i + 1])) {
      out += s[i];
      out += U' ';
      out += s[i + 1];
      out += U' ';
      i += 2;
    } else {
      out += s[i++];
    }
  }
  return out;
}

// ".x" -> " . x" when x is not a digit
inline std::u32string split_before_nondigit(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size() * 2);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && is_period_or_comma(s[i]) && !unicode::is_ascii_digit(s[i + 1])) {
      out += U' ';
      out += s[i];
      out += U' ';
      out += s[i + 1];
      i += 2;
    } else {
      out += s[i++];
    }
  }
  return out;
}

// "9-" -> "9 - "
inline std::u32string split_dash_after_digit(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size() * 2);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + 1 < s.size() && unicode::is_ascii_digit(s[i]) && s[i + 1] == U'-') {
      out += s[i];
      out += U" - ";
      i += 2;
    } else {
      out += s[i++];
    }
  }
  return out;
}

}  // namespace detail

/// The mteval-v13a tokenizer, case preserved. Total over valid UTF-8; throws
/// a decode error otherwise.
inline TokenSequence tokenize_13a(std::string_view text) {
  std::u32string s = unicode::decode(text);
  while (!s.empty() && unicode::is_space(s.back())) s.pop_back();

  detail::replace_all(s, U"<skipped>", U"");
  detail::replace_all(s, U"-\n", U"");
  detail::replace_all(s, U"\n", U" ");
  detail::replace_all(s, U"&quot;", U"\"");
  detail::replace_all(s, U"&amp;", U"&");
  detail::replace_all(s, U"&lt;", U"<");
  detail::replace_all(s, U"&gt;", U">");

  std::u32string spaced;
  spaced.reserve(s.size() * 2 + 2);
  spaced += U' ';
  for (char32_t c : s) {
    if (detail::is_13a_symbol(c)) {
      spaced += U' ';
      spaced += c;
      spaced += U' ';
    } else {
      spaced += c;
    }
  }
  spaced += U' ';

  spaced = detail::split_after_nondigit(spaced);
  spaced = detail::split_before_nondigit(spaced);
  spaced = detail::split_dash_after_digit(spaced);
  return split_whitespace(spaced);
}

}  // namespace mtagg

#endif  // MTAGG_TOKENIZER_HPP_
