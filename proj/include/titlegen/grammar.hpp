#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace titlegen {

// Constituency tree. A leaf carries leaf_word and no children; a
// preterminal is a node whose only child is a leaf.
struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;
  std::optional<std::string> leaf_word;

  bool is_leaf() const { return leaf_word.has_value(); }
  bool is_preterminal() const { return children.size() == 1 && children.front().is_leaf(); }

  static ParseTree leaf(std::string word);
  static ParseTree node(std::string label, std::vector<ParseTree> children);
};

using PosTagSet = std::set<std::string, std::less<>>;

// The Penn Treebank part-of-speech inventory, punctuation tags included.
const PosTagSet& penn_pos_tags();

// Reads one Penn-Treebank-style bracketed tree. A label-less outermost
// node, as some parsers print, is read as ROOT.
ParseTree parse_bracketed(std::string_view text);
std::string to_bracketed(const ParseTree& tree);

// Phrase/clause skeleton of a tree, e.g. "(NP (NP) (PP (NP)))".
struct GrammarPattern {
  std::string canonical;

  bool operator==(const GrammarPattern&) const = default;
  auto operator<=>(const GrammarPattern&) const = default;
};

inline constexpr std::string_view kEmptyPattern = "(EMPTY)";

GrammarPattern extract_pattern(const ParseTree& tree, const PosTagSet& pos_tags);

class PatternBank {
 public:
  PatternBank() = default;
  PatternBank(std::set<std::string> patterns, std::size_t source_count)
      : patterns_(std::move(patterns)), source_count_(source_count) {}

  bool contains(const GrammarPattern& p) const { return patterns_.count(p.canonical) != 0; }
  const std::set<std::string>& patterns() const { return patterns_; }
  std::size_t source_count() const { return source_count_; }
  std::size_t size() const { return patterns_.size(); }

  void add(const GrammarPattern& p) { patterns_.insert(p.canonical); }

  // First line "source_count=<n>", then the sorted patterns, one per line.
  void save(const std::filesystem::path& path) const;
  static PatternBank load(const std::filesystem::path& path);

 private:
  std::set<std::string> patterns_;
  std::size_t source_count_ = 0;
};

PatternBank build_bank(const std::vector<ParseTree>& trees, const PosTagSet& pos_tags);

bool check(const PatternBank& bank, const ParseTree& candidate, const PosTagSet& pos_tags);

// Source of constituency trees for plain sentences.
class ParserAdapter {
 public:
  virtual ~ParserAdapter() = default;
  // One entry per sentence, in order; nullopt where that sentence's tree
  // could not be read. Batch-level failures (exit status, line count)
  // throw.
  virtual std::vector<std::optional<ParseTree>> parse_each(
      const std::vector<std::string>& sentences) const = 0;
};

// Pre-parsed trees: line i of the file is the tree for sentence i.
class TreeFileParser : public ParserAdapter {
 public:
  explicit TreeFileParser(std::filesystem::path path) : path_(std::move(path)) {}
  std::vector<std::optional<ParseTree>> parse_each(
      const std::vector<std::string>& sentences) const override;

 private:
  std::filesystem::path path_;
};

// Runs an external parser once per batch: sentences on stdin, one
// bracketed tree per output line.
class CommandParser : public ParserAdapter {
 public:
  explicit CommandParser(std::string command) : command_(std::move(command)) {}
  std::vector<std::optional<ParseTree>> parse_each(
      const std::vector<std::string>& sentences) const override;

 private:
  std::string command_;
};

// Strict form: any unreadable tree is an error.
std::vector<ParseTree> request_parses(const std::vector<std::string>& sentences,
                                      const ParserAdapter& adapter);

// Reads a tree file, one bracketed tree per line. Unreadable lines are
// skipped and counted in *skipped when given, otherwise they throw.
std::vector<ParseTree> load_tree_file(const std::filesystem::path& path,
                                      std::size_t* skipped = nullptr);

}  // namespace titlegen
