#pragma once

#include <string>
#include <string_view>
#include <vector>

// Word-level text helpers shared by every module. All case folding is
// ASCII-only; bytes >= 0x80 are treated as word characters.
namespace titlegen::text {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

// Trims and collapses internal runs of whitespace (including newlines)
// to a single space.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string> split_whitespace(std::string_view s);

// Whitespace split, then every ASCII punctuation character becomes its
// own token ("non-static," -> "non", "-", "static", ",").
std::vector<std::string> word_tokens(std::string_view s);

// Lowercased word_tokens.
std::vector<std::string> lower_word_tokens(std::string_view s);

// True when the token has at least one alphanumeric or non-ASCII byte.
bool is_word_token(std::string_view token);

// Joins tokens with single spaces, collapsing "x - y" to "x-y" when both
// neighbours are word tokens.
std::string join_hyphenated(const std::vector<std::string>& tokens);

// join_hyphenated(lower_word_tokens(s)): the normal form that
// detokenize(tokenize(s)) reproduces.
std::string canonical_text(std::string_view s);

// join_hyphenated(split_whitespace(s)): whitespace collapse plus hyphen
// normalization without touching case or other punctuation.
std::string normalize_spacing(std::string_view s);

// Byte length of the UTF-8 sequence starting with lead byte c (1 for
// invalid lead bytes so iteration always advances).
std::size_t utf8_length(unsigned char c);

// Splits s into UTF-8 code points.
std::vector<std::string> code_points(std::string_view s);

}  // namespace titlegen::text
