#include "titlegen/parts.hpp"

#include <algorithm>
#include <unordered_set>

#include "titlegen/error.hpp"
#include "titlegen/text.hpp"

namespace titlegen {
namespace {

bool contains_run(const std::vector<std::string>& haystack,
                  const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

}  // namespace

TitlePart make_user_part(const std::string& raw) {
  std::string t = text::collapse_whitespace(raw);
  if (t.empty()) throw ValidationError("title part is empty");
  if (t == "-") throw ValidationError("title part cannot be a bare '-'");
  return {std::move(t), std::nullopt};
}

std::vector<PieceSpan> get_longest_matches(const TokenSeq& tokens, const KeywordMask& mask) {
  if (mask.selected.size() != tokens.size()) {
    throw ValidationError("keyword mask is not aligned with the tokens");
  }
  std::vector<PieceSpan> spans;
  const std::size_t n = tokens.size();
  std::size_t i = 0;
  while (i < n) {
    if (!mask.selected[i]) {
      ++i;
      continue;
    }
    std::size_t first = i;
    std::size_t last = i;
    while (last + 1 < n && mask.selected[last + 1]) ++last;
    i = last + 1;

    while (first > 0 && tokens.pieces[first].is_continuation) --first;
    while (last + 1 < n && tokens.pieces[last + 1].is_continuation) ++last;

    // Widening can make neighbouring runs meet inside one word.
    if (!spans.empty() && first <= spans.back().last) {
      spans.back().last = std::max(spans.back().last, last);
    } else {
      spans.push_back({first, last});
    }
  }
  return spans;
}

std::string repair(const TokenSeq& tokens, const PieceSpan& span) {
  return detokenize(tokens, span.first, span.last);
}

std::vector<TitlePart> dump(const std::vector<TitlePart>& parts) {
  std::vector<TitlePart> kept;
  std::unordered_set<std::string> seen;
  for (const auto& p : parts) {
    if (text::trim(p.text) == "-" || text::trim(p.text).empty()) continue;
    if (!seen.insert(p.text).second) continue;
    kept.push_back(p);
  }

  std::vector<std::vector<std::string>> words;
  words.reserve(kept.size());
  for (const auto& p : kept) words.push_back(text::split_whitespace(p.text));

  std::vector<TitlePart> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < kept.size() && !subsumed; ++j) {
      subsumed = i != j && words[i].size() < words[j].size() && contains_run(words[j], words[i]);
    }
    if (!subsumed) out.push_back(kept[i]);
  }
  return out;
}

std::vector<TitlePart> generate_title_parts(const TokenSeq& tokens, const KeywordMask& mask) {
  std::vector<TitlePart> raw;
  for (const auto& span : get_longest_matches(tokens, mask)) {
    raw.push_back({repair(tokens, span), span});
  }
  return dump(raw);
}

}  // namespace titlegen
