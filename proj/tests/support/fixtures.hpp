#pragma once

#include <filesystem>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "titlegen/arranger.hpp"
#include "titlegen/corpus.hpp"
#include "titlegen/grammar.hpp"
#include "titlegen/scorer.hpp"
#include "titlegen/shallow_parser.hpp"
#include "titlegen/tagger.hpp"

namespace titlegen::testing {

std::filesystem::path data_dir();
std::vector<PaperRecord> desk_corpus();
std::vector<std::string> all_titles();

// Held-out split of the titles corpus: every fifth title.
void split_titles(const std::vector<std::string>& titles, std::vector<std::string>* train,
                  std::vector<std::string>* held_out);

// Unique scratch directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Every code point of `text` plus the given multi-character pieces.
Vocab char_vocab(const std::string& text, const std::set<std::string>& extra = {});

// Single-piece tokens, one per word (test vocabularies hold whole words).
TokenSeq word_seq(const std::vector<std::string>& words);

// Models trained from the desk corpus and the titles list, with a bank of
// shallow-parser patterns over the same titles.
struct DeskModels {
  Vocab vocab;
  std::unique_ptr<ReferenceTokenScorer> tagger;
  std::unique_ptr<ReferenceTitleScorer> scorer;
  PatternBank bank;
  ShallowParser parser;
  PosTagSet pos_tags = penn_pos_tags();

  GenerationModels view() const {
    return {&vocab, tagger.get(), scorer.get(), &bank, &parser, &pos_tags};
  }
};
const DeskModels& desk_models();

// User-edited parts for the robot-mapping title.
std::vector<TitlePart> mapping_edit_parts();
inline constexpr const char* kMappingTitle =
    "mobile robot mapping and localization in non-static environments";

// Test doubles.
class ConstantScorer : public TitleScorer {
 public:
  explicit ConstantScorer(double value) : value_(value) {}
  double evaluate(const std::string&) const override { return value_; }

 private:
  double value_;
};

// Scores by the first character so rankings are spread but deterministic.
class FirstLetterScorer : public TitleScorer {
 public:
  double evaluate(const std::string& text) const override;
};

// Every sentence gets the same tree.
class FixedTreeParser : public ParserAdapter {
 public:
  explicit FixedTreeParser(std::string bracketed);
  std::vector<std::optional<ParseTree>> parse_each(
      const std::vector<std::string>& sentences) const override;

 private:
  ParseTree tree_;
};

class FixedTokenScorer : public TokenScorer {
 public:
  explicit FixedTokenScorer(double value) : value_(value) {}
  std::vector<double> score(const TokenSeq& tokens) const override {
    return std::vector<double>(tokens.size(), value_);
  }

 private:
  double value_;
};

}  // namespace titlegen::testing
