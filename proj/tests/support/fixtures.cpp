#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "titlegen/error.hpp"
#include "titlegen/text.hpp"

namespace fs = std::filesystem;

namespace titlegen::testing {

fs::path data_dir() { return TITLEGEN_DATA_DIR; }

std::vector<PaperRecord> desk_corpus() { return load_corpus(data_dir() / "desk_corpus.jsonl"); }

std::vector<std::string> all_titles() {
  std::ifstream in(data_dir() / "titles.txt");
  if (!in) throw IoError("missing titles.txt");
  std::vector<std::string> titles;
  std::string line;
  while (std::getline(in, line)) {
    auto t = strip_system_name(text::collapse_whitespace(line));
    if (!t.empty()) titles.push_back(std::move(t));
  }
  return titles;
}

void split_titles(const std::vector<std::string>& titles, std::vector<std::string>* train,
                  std::vector<std::string>* held_out) {
  for (std::size_t i = 0; i < titles.size(); ++i) {
    (i % 5 == 4 ? held_out : train)->push_back(titles[i]);
  }
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("titlegen_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Vocab char_vocab(const std::string& s, const std::set<std::string>& extra) {
  std::set<std::string> entries(extra.begin(), extra.end());
  for (auto& cp : text::code_points(text::to_lower(s))) {
    if (cp != " ") entries.insert(cp);
  }
  return Vocab(std::move(entries));
}

TokenSeq word_seq(const std::vector<std::string>& words) {
  TokenSeq seq;
  for (const auto& w : words) seq.pieces.push_back({w, false});
  return seq;
}

const DeskModels& desk_models() {
  static const DeskModels models = [] {
    DeskModels m;
    const auto records = desk_corpus();
    m.vocab = build_vocab(records, 8000);
    std::vector<LabeledTokenSeq> pairs;
    for (const auto& r : records) pairs.push_back(make_training_pairs(r, m.vocab));
    m.tagger = std::make_unique<ReferenceTokenScorer>(train_tagger(pairs, 1.0));

    const auto titles = all_titles();
    auto items = build_training_set(records, 7);
    auto extra = title_items(titles, 7);
    items.insert(items.end(), extra.begin(), extra.end());
    m.scorer = std::make_unique<ReferenceTitleScorer>(train_scorer(items));

    m.bank = build_bank(request_parses(titles, m.parser), m.pos_tags);
    return m;
  }();
  return models;
}

std::vector<TitlePart> mapping_edit_parts() {
  std::vector<TitlePart> parts;
  for (const char* p : {"mobile robot", "in", "mapping and localization", "non - static",
                        "environments"}) {
    parts.push_back({p, std::nullopt});
  }
  return parts;
}

double FirstLetterScorer::evaluate(const std::string& s) const {
  if (s.empty()) return 0.5;
  return 0.5 + static_cast<double>(static_cast<unsigned char>(s[0]) % 26) / 60.0;
}

FixedTreeParser::FixedTreeParser(std::string bracketed) : tree_(parse_bracketed(bracketed)) {}

std::vector<std::optional<ParseTree>> FixedTreeParser::parse_each(
    const std::vector<std::string>& sentences) const {
  return std::vector<std::optional<ParseTree>>(sentences.size(), tree_);
}

}  // namespace titlegen::testing
