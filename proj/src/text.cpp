#include "titlegen/text.hpp"

#include <cctype>

namespace titlegen::text {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u) != 0;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x80) c = static_cast<char>(std::tolower(u));
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<std::string> word_tokens(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& chunk : split_whitespace(s)) {
    std::string word;
    for (char c : chunk) {
      if (is_ascii_punct(c)) {
        if (!word.empty()) out.push_back(std::move(word));
        word.clear();
        out.emplace_back(1, c);
      } else {
        word.push_back(c);
      }
    }
    if (!word.empty()) out.push_back(std::move(word));
  }
  return out;
}

std::vector<std::string> lower_word_tokens(std::string_view s) {
  return word_tokens(to_lower(s));
}

bool is_word_token(std::string_view token) {
  for (char c : token) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || std::isalnum(u) != 0) return true;
  }
  return false;
}

std::string join_hyphenated(const std::vector<std::string>& tokens) {
  std::vector<std::string> merged;
  merged.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "-" && !merged.empty() && is_word_token(merged.back()) &&
        i + 1 < tokens.size() && is_word_token(tokens[i + 1])) {
      merged.back() += "-";
      merged.back() += tokens[i + 1];
      ++i;
      continue;
    }
    merged.push_back(tokens[i]);
  }
  std::string out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += merged[i];
  }
  return out;
}

std::string canonical_text(std::string_view s) {
  return join_hyphenated(lower_word_tokens(s));
}

std::string normalize_spacing(std::string_view s) {
  return join_hyphenated(split_whitespace(s));
}

std::size_t utf8_length(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xE) return 3;
  if ((c >> 3) == 0x1E) return 4;
  return 1;
}

std::vector<std::string> code_points(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t len = utf8_length(static_cast<unsigned char>(s[i]));
    if (i + len > s.size()) len = s.size() - i;
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

}  // namespace titlegen::text
