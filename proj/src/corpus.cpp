#include "titlegen/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "titlegen/error.hpp"
#include "titlegen/text.hpp"

namespace titlegen {
namespace {

using json = nlohmann::json;

// Upper bound on candidate substring length during vocabulary building.
constexpr std::size_t kMaxSubstringCodePoints = 16;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lower_words_of(const PaperRecord& r) {
  std::vector<std::string> words = text::lower_word_tokens(r.title);
  for (const auto& s : r.abstract_sentences) {
    auto w = text::lower_word_tokens(s);
    words.insert(words.end(), w.begin(), w.end());
  }
  return words;
}

PaperRecord record_from_json(const json& j, std::size_t line_no) {
  auto fail = [&](const std::string& why) {
    return ValidationError("line " + std::to_string(line_no) + ": " + why);
  };
  if (!j.is_object()) throw fail("expected a JSON object");
  for (const char* key : {"id", "title", "abstract", "venue", "year"}) {
    if (!j.contains(key)) throw fail(std::string("missing key '") + key + "'");
  }
  if (!j["id"].is_string() || !j["title"].is_string() ||
      !j["venue"].is_string() || !j["year"].is_number_integer()) {
    throw fail("wrong field type");
  }

  PaperRecord r;
  r.id = j["id"].get<std::string>();
  r.venue = j["venue"].get<std::string>();
  r.year = j["year"].get<int>();
  r.title = strip_system_name(text::collapse_whitespace(j["title"].get<std::string>()));
  if (r.title.empty()) throw fail("empty title");

  const json& abs = j["abstract"];
  if (abs.is_string()) {
    r.abstract_sentences = split_sentences(abs.get<std::string>());
  } else if (abs.is_array()) {
    for (const auto& s : abs) {
      if (!s.is_string()) throw fail("abstract array must hold strings");
      std::string sentence = text::collapse_whitespace(s.get<std::string>());
      if (!sentence.empty()) r.abstract_sentences.push_back(std::move(sentence));
    }
  } else {
    throw fail("abstract must be a string or an array of strings");
  }
  if (r.abstract_sentences.empty()) throw fail("empty abstract");
  return r;
}

}  // namespace

std::string PaperRecord::abstract_text() const {
  std::string out;
  for (const auto& s : abstract_sentences) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

std::string SubwordPiece::serialized() const {
  return is_continuation ? "##" + text : text;
}

SubwordPiece SubwordPiece::from_serialized(std::string_view s) {
  if (s.size() > 2 && s.substr(0, 2) == "##") {
    return {std::string(s.substr(2)), true};
  }
  return {std::string(s), false};
}

std::vector<std::size_t> word_index(const TokenSeq& tokens) {
  std::vector<std::size_t> out;
  out.reserve(tokens.size());
  std::size_t word = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !tokens.pieces[i].is_continuation) ++word;
    out.push_back(word);
  }
  return out;
}

Vocab::Vocab(std::set<std::string> entries) {
  for (auto& e : entries) {
    if (e.empty()) continue;
    max_piece_len_ = std::max(max_piece_len_, e.size());
    entries_.insert(e);
  }
}

bool Vocab::contains(std::string_view piece) const {
  return entries_.find(piece) != entries_.end();
}

void Vocab::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << "max_piece_len=" << max_piece_len_ << '\n';
  for (const auto& e : entries_) out << e << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

Vocab Vocab::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("max_piece_len=", 0) != 0) {
    throw ValidationError(path.string() + ": missing max_piece_len header");
  }
  std::set<std::string> entries;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) entries.insert(line);
  }
  return Vocab(std::move(entries));
}

std::vector<std::string> split_sentences(std::string_view input) {
  const std::string s = text::collapse_whitespace(input);
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    const char c = s[i];
    if ((c == '.' || c == '?' || c == '!') && s[i + 1] == ' ' &&
        std::isupper(static_cast<unsigned char>(s[i + 2])) != 0) {
      out.push_back(s.substr(start, i + 1 - start));
      start = i + 2;
    }
  }
  std::string tail = text::trim(std::string_view(s).substr(start));
  if (!tail.empty()) out.push_back(std::move(tail));
  return out;
}

std::string strip_system_name(std::string_view title) {
  const auto colon = title.find(':');
  if (colon == std::string_view::npos) return std::string(title);
  const auto prefix_words = text::split_whitespace(title.substr(0, colon));
  if (prefix_words.empty() || prefix_words.size() > kMaxSystemNameWords) {
    return std::string(title);
  }
  std::string rest = text::trim(title.substr(colon + 1));
  return rest.empty() ? std::string(title) : rest;
}

std::vector<PaperRecord> parse_corpus(std::string_view jsonl) {
  std::vector<PaperRecord> records;
  std::unordered_set<std::string> ids;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < jsonl.size()) {
    auto nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    const std::string line = text::trim(jsonl.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;

    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": malformed JSON (" + e.what() + ")");
    }
    PaperRecord r = record_from_json(j, line_no);
    if (!ids.insert(r.id).second) throw ValidationError("duplicate id " + r.id);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<PaperRecord> load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path));
}

Vocab build_vocab(const std::vector<PaperRecord>& records, std::size_t max_size) {
  std::map<std::string, std::size_t> word_freq;
  for (const auto& r : records) {
    for (auto& w : lower_words_of(r)) ++word_freq[w];
  }

  std::set<std::string> chars;
  std::unordered_map<std::string, std::size_t> substr_freq;
  for (const auto& [word, freq] : word_freq) {
    const auto cps = text::code_points(word);
    chars.insert(cps.begin(), cps.end());
    for (std::size_t b = 0; b < cps.size(); ++b) {
      std::string sub = cps[b];
      for (std::size_t e = b + 1; e < cps.size() && e - b < kMaxSubstringCodePoints; ++e) {
        sub += cps[e];
        substr_freq[sub] += freq;
      }
    }
  }
  if (max_size < chars.size()) {
    throw ValidationError("vocab size " + std::to_string(max_size) +
                          " is smaller than the " + std::to_string(chars.size()) +
                          " distinct characters in the corpus");
  }

  std::vector<std::pair<std::string, std::size_t>> ranked(substr_freq.begin(),
                                                          substr_freq.end());
  // Frequency first, then longer pieces, then lexicographic.
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });

  std::set<std::string> entries = chars;
  for (const auto& [sub, freq] : ranked) {
    if (entries.size() >= max_size) break;
    entries.insert(sub);
  }
  return Vocab(std::move(entries));
}

TokenSeq tokenize(std::string_view input, const Vocab& vocab) {
  TokenSeq seq;
  seq.origin = std::string(input);
  const auto words = text::lower_word_tokens(input);
  if (words.empty()) throw ValidationError("cannot tokenize empty text");

  for (const auto& word : words) {
    std::size_t pos = 0;
    while (pos < word.size()) {
      const std::size_t cp_len =
          std::min(text::utf8_length(static_cast<unsigned char>(word[pos])),
                   word.size() - pos);
      std::size_t take = 0;
      const std::size_t longest = std::min(vocab.max_piece_len(), word.size() - pos);
      for (std::size_t len = longest; len >= cp_len && len > 0; --len) {
        const std::size_t end = pos + len;
        // Only cut on code-point boundaries.
        if (end < word.size() && (static_cast<unsigned char>(word[end]) & 0xC0) == 0x80) {
          continue;
        }
        if (vocab.contains(std::string_view(word).substr(pos, len))) {
          take = len;
          break;
        }
      }
      // Characters unseen at vocab-building time still tokenize as one piece.
      if (take == 0) take = cp_len;
      seq.pieces.push_back({word.substr(pos, take), pos > 0});
      pos += take;
    }
  }
  return seq;
}

std::string detokenize(const TokenSeq& tokens, std::size_t first, std::size_t last) {
  if (tokens.empty() || first > last || last >= tokens.size()) {
    throw ValidationError("invalid piece span");
  }
  if (tokens.pieces[first].is_continuation) {
    throw ValidationError("token sequence starts with a continuation piece");
  }
  std::vector<std::string> words;
  for (std::size_t i = first; i <= last; ++i) {
    const auto& p = tokens.pieces[i];
    if (p.is_continuation) {
      words.back() += p.text;
    } else {
      words.push_back(p.text);
    }
  }
  return text::join_hyphenated(words);
}

std::string detokenize(const TokenSeq& tokens) {
  if (tokens.empty()) throw ValidationError("cannot detokenize an empty sequence");
  return detokenize(tokens, 0, tokens.size() - 1);
}

LabeledTokenSeq make_training_pairs(const PaperRecord& record, const Vocab& vocab) {
  const auto title_words = text::lower_word_tokens(record.title);
  const std::unordered_set<std::string> in_title(title_words.begin(), title_words.end());

  LabeledTokenSeq out;
  out.tokens = tokenize(record.abstract_text(), vocab);
  const auto words = word_index(out.tokens);

  // Rebuild each surface word from its pieces, then label per word.
  std::vector<std::string> surface;
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    if (words[i] == surface.size()) surface.emplace_back();
    surface.back() += out.tokens.pieces[i].text;
  }
  out.labels.reserve(out.tokens.size());
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    out.labels.push_back(in_title.count(surface[words[i]]) ? 1 : 0);
  }
  return out;
}

EvalNegatives make_eval_negatives(const PaperRecord& record, std::uint64_t seed) {
  const auto words = text::split_whitespace(record.title);
  if (words.size() < 2) {
    throw ValidationError("title '" + record.title + "' has fewer than 2 words");
  }
  if (std::all_of(words.begin(), words.end(),
                  [&](const std::string& w) { return w == words.front(); })) {
    throw ValidationError("title '" + record.title + "' has no distinct word order");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::string> shuffled;
  do {
    shuffled = words;
    for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
      std::swap(shuffled[i], shuffled[uniform_below(rng, i + 1)]);
    }
  } while (shuffled == words);

  EvalNegatives out;
  for (std::size_t i = 0; i < shuffled.size(); ++i) {
    if (i > 0) out.shuffled_title.push_back(' ');
    out.shuffled_title += shuffled[i];
  }
  out.first_sentence = record.abstract_sentences.front();
  return out;
}

double title_coverage(const std::vector<PaperRecord>& records) {
  if (records.empty()) throw ValidationError("title_coverage needs at least one record");
  std::size_t total = 0;
  std::size_t covered = 0;
  for (const auto& r : records) {
    std::unordered_set<std::string> abstract_words;
    for (const auto& s : r.abstract_sentences) {
      for (auto& w : text::lower_word_tokens(s)) abstract_words.insert(std::move(w));
    }
    for (const auto& w : text::lower_word_tokens(r.title)) {
      if (!text::is_word_token(w)) continue;
      ++total;
      if (abstract_words.count(w)) ++covered;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(total);
}

}  // namespace titlegen
