#include "titlegen/grammar.hpp"

#include <cctype>
#include <fstream>

#include "titlegen/error.hpp"
#include "titlegen/subprocess.hpp"
#include "titlegen/text.hpp"

namespace titlegen {
namespace {

class BracketReader {
 public:
  explicit BracketReader(std::string_view s) : s_(s) {}

  ParseTree read_root() {
    skip_space();
    if (pos_ >= s_.size()) throw ParseError("empty tree", pos_);
    ParseTree t = read_node(true);
    skip_space();
    if (pos_ != s_.size()) throw ParseError("trailing input after tree", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }

  std::string read_atom() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != ')' &&
           std::isspace(static_cast<unsigned char>(s_[pos_])) == 0) {
      ++pos_;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  ParseTree read_node(bool outermost) {
    const std::size_t open = pos_;
    if (pos_ >= s_.size() || s_[pos_] != '(') throw ParseError("expected '('", pos_);
    ++pos_;
    skip_space();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);

    ParseTree node;
    if (s_[pos_] != '(' && s_[pos_] != ')') node.label = read_atom();
    skip_space();

    while (true) {
      if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
      if (s_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (s_[pos_] == '(') {
        node.children.push_back(read_node(false));
      } else {
        node.children.push_back(ParseTree::leaf(read_atom()));
      }
      skip_space();
    }

    if (node.children.empty()) throw ParseError("empty node", open);
    if (node.label.empty()) {
      if (!outermost) throw ParseError("node without a label", open);
      node.label = "ROOT";
    }
    return node;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void write_bracketed(const ParseTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += *t.leaf_word;
    return;
  }
  out.push_back('(');
  out += t.label;
  for (const auto& c : t.children) {
    out.push_back(' ');
    write_bracketed(c, out);
  }
  out.push_back(')');
}

bool is_synthetic_root(std::string_view label) {
  return label == "ROOT" || label == "TOP";
}

// Serialized skeleton nodes contributed by t (several when t itself is
// dropped and its children are spliced upward).
void skeleton(const ParseTree& t, const PosTagSet& pos_tags, bool top,
              std::vector<std::string>& out) {
  if (t.is_leaf()) return;
  const bool dropped = t.is_preterminal() || pos_tags.count(t.label) != 0 ||
                       (top && is_synthetic_root(t.label));
  std::vector<std::string> inner;
  for (const auto& c : t.children) skeleton(c, pos_tags, top && dropped, inner);
  if (dropped) {
    for (auto& s : inner) out.push_back(std::move(s));
    return;
  }
  std::string s = "(" + t.label;
  for (const auto& c : inner) s += " " + c;
  s += ")";
  out.push_back(std::move(s));
}

std::optional<ParseTree> try_parse(const std::string& line) {
  try {
    return parse_bracketed(line);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

}  // namespace

ParseTree ParseTree::leaf(std::string word) {
  ParseTree t;
  t.leaf_word = std::move(word);
  return t;
}

ParseTree ParseTree::node(std::string label, std::vector<ParseTree> children) {
  ParseTree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

const PosTagSet& penn_pos_tags() {
  static const PosTagSet tags = {
      "CC",  "CD",  "DT",   "EX",   "FW",  "IN",  "JJ",  "JJR",   "JJS",   "LS",   "MD",
      "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP", "PRP$",  "RB",    "RBR",  "RBS",
      "RP",  "SYM", "TO",   "UH",   "VB",  "VBD", "VBG", "VBN",   "VBP",   "VBZ",  "WDT",
      "WP",  "WP$", "WRB",  ",",    ".",   ":",   "``",  "''",    "-LRB-", "-RRB-", "#",
      "$",   "HYPH", "NFP", "AFX",  "ADD", "-NONE-"};
  return tags;
}

ParseTree parse_bracketed(std::string_view text) { return BracketReader(text).read_root(); }

std::string to_bracketed(const ParseTree& tree) {
  std::string out;
  write_bracketed(tree, out);
  return out;
}

GrammarPattern extract_pattern(const ParseTree& tree, const PosTagSet& pos_tags) {
  std::vector<std::string> nodes;
  skeleton(tree, pos_tags, true, nodes);
  if (nodes.empty()) return {std::string(kEmptyPattern)};
  std::string joined;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) joined.push_back(' ');
    joined += nodes[i];
  }
  return {std::move(joined)};
}

void PatternBank::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << "source_count=" << source_count_ << '\n';
  for (const auto& p : patterns_) out << p << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

PatternBank PatternBank::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  constexpr std::string_view kHeader = "source_count=";
  if (!std::getline(in, line) || line.rfind(kHeader, 0) != 0) {
    throw ValidationError(path.string() + ": missing source_count header");
  }
  std::size_t count = 0;
  try {
    count = std::stoull(line.substr(kHeader.size()));
  } catch (const std::exception&) {
    throw ValidationError(path.string() + ": bad source_count");
  }
  std::set<std::string> patterns;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) patterns.insert(line);
  }
  return PatternBank(std::move(patterns), count);
}

PatternBank build_bank(const std::vector<ParseTree>& trees, const PosTagSet& pos_tags) {
  std::set<std::string> patterns;
  for (const auto& t : trees) patterns.insert(extract_pattern(t, pos_tags).canonical);
  return PatternBank(std::move(patterns), trees.size());
}

bool check(const PatternBank& bank, const ParseTree& candidate, const PosTagSet& pos_tags) {
  return bank.contains(extract_pattern(candidate, pos_tags));
}

std::vector<std::optional<ParseTree>> TreeFileParser::parse_each(
    const std::vector<std::string>& sentences) const {
  std::ifstream in(path_, std::ios::binary);
  if (!in) throw IoError("cannot open tree file " + path_.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.size() != sentences.size()) {
    throw ExternalError("expected " + std::to_string(sentences.size()) + " trees, got " +
                        std::to_string(lines.size()));
  }
  std::vector<std::optional<ParseTree>> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(try_parse(l));
  return out;
}

std::vector<std::optional<ParseTree>> CommandParser::parse_each(
    const std::vector<std::string>& sentences) const {
  for (const auto& s : sentences) {
    if (s.find('\n') != std::string::npos) {
      throw ValidationError("sentences passed to a parser must be single lines");
    }
  }
  const auto lines = run_line_filter(command_, sentences);
  if (lines.size() != sentences.size()) {
    throw ExternalError("expected " + std::to_string(sentences.size()) + " trees, got " +
                        std::to_string(lines.size()));
  }
  std::vector<std::optional<ParseTree>> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(try_parse(l));
  return out;
}

std::vector<ParseTree> request_parses(const std::vector<std::string>& sentences,
                                      const ParserAdapter& adapter) {
  auto parsed = adapter.parse_each(sentences);
  if (parsed.size() != sentences.size()) {
    throw ExternalError("expected " + std::to_string(sentences.size()) + " trees, got " +
                        std::to_string(parsed.size()));
  }
  std::vector<ParseTree> out;
  out.reserve(parsed.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (!parsed[i]) {
      throw ExternalError("unparseable tree for sentence " + std::to_string(i + 1));
    }
    out.push_back(std::move(*parsed[i]));
  }
  return out;
}

std::vector<ParseTree> load_tree_file(const std::filesystem::path& path, std::size_t* skipped) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open tree file " + path.string());
  std::vector<ParseTree> trees;
  std::string line;
  std::size_t line_no = 0;
  if (skipped) *skipped = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      trees.push_back(parse_bracketed(line));
    } catch (const ParseError& e) {
      if (!skipped) {
        throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
      }
      ++*skipped;
    }
  }
  return trees;
}

}  // namespace titlegen
