#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "titlegen/grammar.hpp"

namespace titlegen {

// Deterministic rule-based bracketer for short title-like strings: a
// lexicon-and-suffix POS tagger followed by NP chunking, coordination, PP
// formation and attachment, and a simple VP/S layer. It stands in for a
// statistical constituency parser when none is configured; patterns built
// with it are only comparable to candidates parsed by it.
class ShallowParser : public ParserAdapter {
 public:
  ParseTree parse(std::string_view sentence) const;

  std::vector<std::optional<ParseTree>> parse_each(
      const std::vector<std::string>& sentences) const override;
};

// Penn tag for one token (case-insensitive).
std::string shallow_pos_tag(std::string_view token);

// Whitespace split with leading/trailing punctuation peeled into separate
// tokens; inner hyphens stay attached.
std::vector<std::string> shallow_tokens(std::string_view sentence);

}  // namespace titlegen
