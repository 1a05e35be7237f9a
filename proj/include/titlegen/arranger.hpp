#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "titlegen/corpus.hpp"
#include "titlegen/grammar.hpp"
#include "titlegen/parts.hpp"
#include "titlegen/scorer.hpp"
#include "titlegen/tagger.hpp"

namespace titlegen {

struct TitleCandidate {
  std::string text;
  double score = 0.0;
  std::vector<std::size_t> ordering;
  bool grammar_ok = false;
};

struct GenerationConfig {
  double eval_threshold = 0.5;
  // Hard cap on permutation size: 8! = 40,320 orderings.
  std::size_t max_parts = 8;
  double base_keyword_threshold = -0.5;
  std::size_t min_target_parts = 3;
  std::size_t max_target_parts = 6;
  // Zero means unlimited.
  std::chrono::milliseconds time_budget{0};

  void validate() const;
};

// Joins part texts in `ordering` with single spaces, then collapses
// whitespace and "x - y" hyphens.
std::string assemble(const std::vector<TitlePart>& parts,
                     const std::vector<std::size_t>& ordering);

struct ExaminedCandidate {
  std::string text;
  std::vector<std::size_t> ordering;
  bool grammar_ok = false;
};

struct ShapeResult {
  // Deduplicated by text (max score kept), score descending, then text.
  std::vector<TitleCandidate> candidates;
  // Every assembled permutation, before any gate, in enumeration order.
  std::vector<ExaminedCandidate> examined;
  std::size_t grammar_passed = 0;
};

// Examines every permutation of the parts: assemble, parse (one batched
// adapter call), grammar gate, then the appropriateness threshold.
ShapeResult shape(const std::vector<TitlePart>& parts, const PatternBank& bank,
                  const TitleScorer& scorer, const ParserAdapter& parser,
                  const GenerationConfig& config, const PosTagSet& pos_tags = penn_pos_tags());

TitleCandidate fallback_original_order(const std::vector<TitlePart>& parts,
                                       const TitleScorer& scorer);

struct GenerationModels {
  const Vocab* vocab = nullptr;
  const TokenScorer* tagger = nullptr;
  const TitleScorer* scorer = nullptr;
  const PatternBank* bank = nullptr;
  const ParserAdapter* parser = nullptr;
  const PosTagSet* pos_tags = nullptr;
};

struct GenerationResult {
  std::vector<TitlePart> parts;
  std::vector<TitleCandidate> candidates;
  bool used_fallback = false;
  std::size_t examined = 0;
  KeywordMask mask;
};

// Tokenize, pick keywords with the adaptive threshold, build parts (or
// take the user's), arrange, and fall back to the original order when
// nothing survives.
GenerationResult generate_from_abstract(const std::string& abstract,
                                        const GenerationModels& models,
                                        const GenerationConfig& config,
                                        const std::optional<std::vector<TitlePart>>& user_parts = {});

// Parts-only half of generate_from_abstract.
std::vector<TitlePart> extract_parts(const std::string& abstract, const GenerationModels& models,
                                     const GenerationConfig& config, KeywordMask* mask_out = nullptr);

// Text of the top-ranked candidate (the fallback when nothing passes).
std::string best_title(const std::string& abstract, const GenerationModels& models,
                       const GenerationConfig& config);

// Shape plus fallback for already-fixed parts.
GenerationResult arrange_parts(const std::vector<TitlePart>& parts,
                               const GenerationModels& models, const GenerationConfig& config);

}  // namespace titlegen
