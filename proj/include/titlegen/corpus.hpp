#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace titlegen {

// One corpus entry: a paper title with its abstract split into sentences.
struct PaperRecord {
  std::string id;
  std::string title;
  std::vector<std::string> abstract_sentences;
  std::string venue;
  int year = 0;

  std::string abstract_text() const;
};

// A tokenizer piece. Continuation pieces serialize with a "##" prefix;
// `text` never carries it.
struct SubwordPiece {
  std::string text;
  bool is_continuation = false;

  std::string serialized() const;
  static SubwordPiece from_serialized(std::string_view s);

  bool operator==(const SubwordPiece&) const = default;
};

struct TokenSeq {
  std::vector<SubwordPiece> pieces;
  std::string origin;

  std::size_t size() const { return pieces.size(); }
  bool empty() const { return pieces.empty(); }
};

// Index of the surface word each piece belongs to.
std::vector<std::size_t> word_index(const TokenSeq& tokens);

class Vocab {
 public:
  Vocab() = default;
  explicit Vocab(std::set<std::string> entries);

  bool contains(std::string_view piece) const;
  const std::set<std::string, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  // Longest entry, in bytes.
  std::size_t max_piece_len() const { return max_piece_len_; }

  // Vocab file: first line "max_piece_len=<n>", then one entry per line.
  void save(const std::filesystem::path& path) const;
  static Vocab load(const std::filesystem::path& path);

 private:
  std::set<std::string, std::less<>> entries_;
  std::size_t max_piece_len_ = 1;
};

struct LabeledTokenSeq {
  TokenSeq tokens;
  std::vector<int> labels;
};

struct EvalNegatives {
  std::string shuffled_title;
  std::string first_sentence;
};

// Reads a JSON-lines corpus. Titles pass strip_system_name and whitespace
// normalization; string abstracts are split into sentences.
std::vector<PaperRecord> load_corpus(const std::filesystem::path& path);
std::vector<PaperRecord> parse_corpus(std::string_view jsonl);

// Drops a leading "System:" prefix when the pre-colon part has at most
// kMaxSystemNameWords words.
inline constexpr std::size_t kMaxSystemNameWords = 4;
std::string strip_system_name(std::string_view title);

// Sentence boundary: '.', '?' or '!' followed by a space and an uppercase
// ASCII letter.
std::vector<std::string> split_sentences(std::string_view text);

Vocab build_vocab(const std::vector<PaperRecord>& records, std::size_t max_size);

TokenSeq tokenize(std::string_view text, const Vocab& vocab);
std::string detokenize(const TokenSeq& tokens);
// Detokenizes pieces[first, last] (inclusive).
std::string detokenize(const TokenSeq& tokens, std::size_t first, std::size_t last);

LabeledTokenSeq make_training_pairs(const PaperRecord& record, const Vocab& vocab);

EvalNegatives make_eval_negatives(const PaperRecord& record, std::uint64_t seed);

double title_coverage(const std::vector<PaperRecord>& records);

// Uniform integer in [0, bound) from a 64-bit engine; rejection sampling
// keeps it exact and identical across standard libraries.
template <class Engine>
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace titlegen
