#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "titlegen/arranger.hpp"

namespace titlegen {

// File names inside a model directory.
inline constexpr const char* kVocabFile = "vocab.txt";
inline constexpr const char* kTaggerFile = "tagger.json";
inline constexpr const char* kScorerFile = "scorer.json";
inline constexpr const char* kBankFile = "bank.txt";

struct ModelOptions {
  std::filesystem::path dir;
  // Optional external backends; empty means the reference models in dir.
  std::string tagger_command;
  std::string scorer_command;
  // Parser selection: an external command, a pre-parsed tree file, or
  // (both empty) the built-in shallow parser.
  std::string parser_command;
  std::filesystem::path tree_file;
};

// Owns everything a generation run needs.
struct ModelBundle {
  Vocab vocab;
  std::unique_ptr<TokenScorer> tagger;
  std::unique_ptr<TitleScorer> scorer;
  PatternBank bank;
  std::unique_ptr<ParserAdapter> parser;
  PosTagSet pos_tags = penn_pos_tags();

  GenerationModels view() const {
    return {&vocab, tagger.get(), scorer.get(), &bank, parser.get(), &pos_tags};
  }
};

ModelBundle load_models(const ModelOptions& options);

std::unique_ptr<ParserAdapter> make_parser(const std::string& command,
                                           const std::filesystem::path& tree_file);

}  // namespace titlegen
