#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "titlegen/corpus.hpp"
#include "titlegen/tagger.hpp"

namespace titlegen {

// Inclusive range of piece indices into an abstract TokenSeq.
struct PieceSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  bool operator==(const PieceSpan&) const = default;
};

// A contiguous word sequence taken from the abstract, or typed by the user
// (no source span).
struct TitlePart {
  std::string text;
  std::optional<PieceSpan> source_span;

  bool operator==(const TitlePart&) const = default;
};

// Validates and normalizes a user-authored part: trimmed, whitespace
// collapsed, not empty and not a bare "-".
TitlePart make_user_part(const std::string& text);

// Maximal runs of selected pieces in abstract order, widened to whole words.
std::vector<PieceSpan> get_longest_matches(const TokenSeq& tokens, const KeywordMask& mask);

std::string repair(const TokenSeq& tokens, const PieceSpan& span);

// Drops bare "-" parts, exact duplicates, and parts whose words occur as a
// contiguous run inside another part.
std::vector<TitlePart> dump(const std::vector<TitlePart>& parts);

std::vector<TitlePart> generate_title_parts(const TokenSeq& tokens, const KeywordMask& mask);

}  // namespace titlegen
