#include "titlegen/arranger.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "titlegen/error.hpp"
#include "titlegen/text.hpp"

namespace titlegen {
namespace {

void require_models(const GenerationModels& m) {
  if (!m.vocab || !m.tagger || !m.scorer || !m.bank || !m.parser) {
    throw ValidationError("generation models are not fully loaded");
  }
}

}  // namespace

void GenerationConfig::validate() const {
  if (!(eval_threshold >= 0.0 && eval_threshold <= 1.0)) {
    throw ValidationError("eval_threshold must lie in [0,1]");
  }
  if (max_parts < 1) throw ValidationError("max_parts must be at least 1");
  if (min_target_parts > max_target_parts) {
    throw ValidationError("part range is empty");
  }
}

std::string assemble(const std::vector<TitlePart>& parts,
                     const std::vector<std::size_t>& ordering) {
  if (ordering.size() != parts.size()) throw ValidationError("ordering is not a permutation");
  std::vector<bool> used(parts.size(), false);
  std::string joined;
  for (std::size_t idx : ordering) {
    if (idx >= parts.size() || used[idx]) throw ValidationError("ordering is not a permutation");
    used[idx] = true;
    joined += parts[idx].text;
    joined.push_back(' ');
  }
  return text::normalize_spacing(joined);
}

ShapeResult shape(const std::vector<TitlePart>& parts, const PatternBank& bank,
                  const TitleScorer& scorer, const ParserAdapter& parser,
                  const GenerationConfig& config, const PosTagSet& pos_tags) {
  config.validate();
  if (parts.empty()) throw ValidationError("no title parts");
  if (parts.size() > config.max_parts) {
    throw ValidationError("too many parts: " + std::to_string(parts.size()) + " > " +
                          std::to_string(config.max_parts));
  }
  const auto start = std::chrono::steady_clock::now();
  auto check_deadline = [&] {
    if (config.time_budget.count() > 0 &&
        std::chrono::steady_clock::now() - start > config.time_budget) {
      throw TimeoutError("candidate generation exceeded its time budget");
    }
  };

  ShapeResult result;
  std::vector<std::size_t> ordering(parts.size());
  std::iota(ordering.begin(), ordering.end(), 0);
  // Lexicographic order of index sequences, the same order the recursive
  // take-one-part-and-recurse enumeration produces.
  do {
    result.examined.push_back({assemble(parts, ordering), ordering, false});
    if ((result.examined.size() & 1023) == 0) check_deadline();
  } while (std::next_permutation(ordering.begin(), ordering.end()));

  std::vector<std::string> texts;
  texts.reserve(result.examined.size());
  for (const auto& e : result.examined) texts.push_back(e.text);
  const auto trees = parser.parse_each(texts);
  if (trees.size() != texts.size()) {
    throw ExternalError("expected " + std::to_string(texts.size()) + " trees, got " +
                        std::to_string(trees.size()));
  }
  check_deadline();

  std::vector<std::size_t> passed;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    // An unreadable parse is a grammar failure for that candidate only.
    result.examined[i].grammar_ok = trees[i].has_value() && check(bank, *trees[i], pos_tags);
    if (result.examined[i].grammar_ok) passed.push_back(i);
  }
  result.grammar_passed = passed.size();

  std::vector<std::string> to_score;
  to_score.reserve(passed.size());
  for (std::size_t i : passed) to_score.push_back(result.examined[i].text);
  const auto scores = scorer.evaluate_batch(to_score);
  check_deadline();

  std::unordered_map<std::string, std::size_t> by_text;
  for (std::size_t k = 0; k < passed.size(); ++k) {
    if (scores[k] < config.eval_threshold) continue;
    const auto& e = result.examined[passed[k]];
    const auto [it, inserted] = by_text.emplace(e.text, result.candidates.size());
    if (inserted) {
      result.candidates.push_back({e.text, scores[k], e.ordering, true});
    } else if (scores[k] > result.candidates[it->second].score) {
      result.candidates[it->second].score = scores[k];
      result.candidates[it->second].ordering = e.ordering;
    }
  }
  std::sort(result.candidates.begin(), result.candidates.end(),
            [](const TitleCandidate& a, const TitleCandidate& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.text < b.text;
            });
  return result;
}

TitleCandidate fallback_original_order(const std::vector<TitlePart>& parts,
                                       const TitleScorer& scorer) {
  if (parts.empty()) throw ValidationError("no title parts");
  TitleCandidate c;
  c.ordering.resize(parts.size());
  std::iota(c.ordering.begin(), c.ordering.end(), 0);
  c.text = assemble(parts, c.ordering);
  c.grammar_ok = false;
  c.score = scorer.evaluate(c.text);
  return c;
}

std::vector<TitlePart> extract_parts(const std::string& abstract, const GenerationModels& models,
                                     const GenerationConfig& config, KeywordMask* mask_out) {
  require_models(models);
  config.validate();
  const TokenSeq tokens = tokenize(abstract, *models.vocab);
  AdaptiveThresholdOptions opt;
  opt.base = config.base_keyword_threshold;
  opt.min_parts = config.min_target_parts;
  opt.max_parts = config.max_target_parts;
  KeywordMask mask = adaptive_threshold(*models.tagger, tokens, opt);
  auto parts = generate_title_parts(tokens, mask);
  if (mask_out) *mask_out = std::move(mask);
  return parts;
}

GenerationResult arrange_parts(const std::vector<TitlePart>& parts,
                               const GenerationModels& models, const GenerationConfig& config) {
  require_models(models);
  if (parts.empty()) throw ValidationError("no title parts");
  GenerationResult out;
  out.parts = parts;
  const PosTagSet& tags = models.pos_tags ? *models.pos_tags : penn_pos_tags();
  ShapeResult shaped = shape(parts, *models.bank, *models.scorer, *models.parser, config, tags);
  out.examined = shaped.examined.size();
  if (shaped.candidates.empty()) {
    out.used_fallback = true;
    out.candidates = {fallback_original_order(parts, *models.scorer)};
  } else {
    out.candidates = std::move(shaped.candidates);
  }
  return out;
}

GenerationResult generate_from_abstract(const std::string& abstract,
                                        const GenerationModels& models,
                                        const GenerationConfig& config,
                                        const std::optional<std::vector<TitlePart>>& user_parts) {
  KeywordMask mask;
  std::vector<TitlePart> parts = extract_parts(abstract, models, config, &mask);
  if (user_parts) parts = *user_parts;
  if (parts.empty()) throw ValidationError("no title parts");
  GenerationResult out = arrange_parts(parts, models, config);
  out.mask = std::move(mask);
  return out;
}

std::string best_title(const std::string& abstract, const GenerationModels& models,
                       const GenerationConfig& config) {
  return generate_from_abstract(abstract, models, config).candidates.front().text;
}

}  // namespace titlegen
