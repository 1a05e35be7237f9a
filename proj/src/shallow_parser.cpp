#include "titlegen/shallow_parser.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "titlegen/error.hpp"
#include "titlegen/text.hpp"

namespace titlegen {
namespace {

const std::unordered_map<std::string_view, std::string_view>& closed_class() {
  static const std::unordered_map<std::string_view, std::string_view> lex = [] {
    std::unordered_map<std::string_view, std::string_view> m;
    auto add = [&m](std::string_view tag, std::initializer_list<std::string_view> words) {
      for (auto w : words) m.emplace(w, tag);
    };
    add("DT", {"a", "an", "the", "this", "that", "these", "those", "each", "every", "some",
               "any", "all", "no", "another", "both", "either", "neither"});
    add("PRP$", {"our", "their", "its", "his", "her", "my", "your"});
    add("PRP", {"we", "it", "they", "i", "you", "he", "she", "them", "us"});
    add("IN", {"of", "in", "on", "for", "with", "from", "by", "at", "into", "via", "over",
               "under", "through", "between", "among", "across", "about", "against",
               "towards", "toward", "without", "within", "beyond", "upon", "during", "after",
               "before", "than", "like", "versus", "vs", "despite", "per", "along", "around",
               "behind", "near", "onto", "since", "until", "unlike", "whether", "if",
               "because", "while", "as"});
    add("TO", {"to"});
    add("CC", {"and", "or", "but", "nor", "&", "plus"});
    add("MD", {"can", "could", "should", "would", "will", "may", "might", "must", "shall"});
    add("VBZ", {"is", "does", "has"});
    add("VBP", {"are", "do", "have"});
    add("VBD", {"was", "were", "did", "had"});
    add("VB", {"be", "make", "learn", "need", "see"});
    add("WRB", {"how", "when", "where", "why"});
    add("WDT", {"which"});
    add("WP", {"what", "who"});
    add("RB", {"not", "very", "also", "only", "just", "further", "even", "still", "almost",
               "more", "most", "less", "beyond", "again", "together"});
    add("EX", {"there"});
    add("CD", {"one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
               "hundred", "thousand", "million", "billion"});
    add("JJ", {"new", "deep", "fast", "large", "small", "efficient", "robust", "novel",
               "simple", "optimal", "multiple", "scalable", "sparse", "high", "low", "free",
               "open", "hard", "soft", "fair", "safe", "good", "big", "better", "best",
               "first", "single", "complex", "discrete", "implicit", "explicit", "latent",
               "random", "accurate", "different", "independent", "relevant", "coherent",
               "consistent", "intelligent", "autonomous", "unknown", "mobile", "static",
               "real", "long", "short", "many", "few", "full", "partial", "private", "strong",
               "weak", "hybrid", "modular", "adversarial", "approximate", "exact", "generic",
               "joint", "tight", "structured", "unified", "cooperative", "competitive",
               "compositional", "contextual", "conditional", "sequential", "temporal",
               "spatial", "visual", "neural", "semantic", "syntactic", "probabilistic",
               "stochastic", "dynamic", "automatic", "efficient", "sufficient", "open-ended",
               "lifelong", "human-like", "self-supervised"});
    add("NN", {"signal", "retrieval", "interval", "proposal", "trial", "journal", "animal",
               "individual", "terminal", "material", "tutorial", "manual", "potential",
               "arrival", "removal", "approval", "rival", "logic", "music", "topic",
               "graphic", "clinic", "traffic", "metric", "heuristic", "critic", "mechanic",
               "objective", "alternative", "initiative", "representative", "perspective",
               "incentive", "narrative", "derivative", "directive", "string", "thing",
               "spring", "king", "ring", "speed", "seed", "feed", "hundred", "bed", "need",
               "analysis", "bayes", "lens", "series", "basis", "thesis", "synthesis",
               "hypothesis", "diagnosis", "bias", "gas", "news", "physics", "mathematics",
               "robotics", "economics", "linguistics", "semantics", "dynamics", "genomics",
               "ethics", "statistics", "graphics", "analytics", "kinematics", "mechanics",
               "optics", "corpus", "status", "consensus", "focus", "bonus", "virus",
               "process", "access", "class", "loss", "success", "glass", "business",
               "awareness", "fairness", "robustness", "effectiveness", "usefulness",
               "correctness", "completeness", "attention", "question", "world", "time",
               "data", "information", "knowledge", "learning", "reasoning", "planning",
               "understanding", "training", "modeling", "modelling", "computing",
               "clustering", "ranking", "mapping", "parsing", "tracking", "matching",
               "sampling", "labeling", "tagging", "programming", "scheduling", "encoding",
               "embedding", "filtering", "forecasting", "pretraining", "fine-tuning",
               "hashing", "indexing", "grounding", "crowdsourcing", "finding", "setting",
               "thinking", "meaning", "beijing", "ai", "model", "level", "travel", "label",
               "kernel", "channel", "panel", "pixel", "novel-view"});
    return m;
  }();
  return lex;
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

std::string_view punct_tag(std::string_view t) {
  if (t == ",") return ",";
  if (t == "." || t == "?" || t == "!") return ".";
  if (t == ":" || t == ";") return ":";
  if (t == "(" || t == "[" || t == "{") return "-LRB-";
  if (t == ")" || t == "]" || t == "}") return "-RRB-";
  if (t == "\"" || t == "'" || t == "`") return "''";
  if (t == "-" || t == "--") return "HYPH";
  return "SYM";
}

std::string tag_plain(std::string_view w) {
  const auto& lex = closed_class();
  if (auto it = lex.find(w); it != lex.end()) return std::string(it->second);
  if (std::any_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return "CD";
  }
  if (w.size() > 4 && ends_with(w, "ing")) return "VBG";
  if (w.size() > 4 && ends_with(w, "ed")) return "VBN";
  if (w.size() > 4 && ends_with(w, "ly")) return "RB";
  for (std::string_view suf : {"al", "ic", "ive", "ous", "able", "ible", "ful", "less", "ary",
                               "ian", "ent", "ant"}) {
    // "-ent"/"-ant" are nouns as often as adjectives; only longer words.
    const std::size_t min_len = (suf == "ent" || suf == "ant") ? 9 : 5;
    if (w.size() >= min_len && ends_with(w, suf)) {
      if ((suf == "ent" || suf == "ant") && (ends_with(w, "ment") || ends_with(w, "ents"))) {
        break;
      }
      return "JJ";
    }
  }
  if (w.size() > 3 && ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is")) {
    return "NNS";
  }
  return "NN";
}

bool is_punct_token(std::string_view t) {
  return !t.empty() && std::none_of(t.begin(), t.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u) != 0;
  });
}

const std::set<std::string_view> kNominalModifier = {"JJ", "JJR", "JJS", "NN", "NNS", "NNP",
                                                     "NNPS", "VBG", "VBN", "CD", "FW"};
const std::set<std::string_view> kNominalHead = {"NN", "NNS", "NNP", "NNPS", "CD", "VBG", "FW"};
const std::set<std::string_view> kVerbs = {"VB", "VBD", "VBZ", "VBP", "MD"};

bool is_phrase(const ParseTree& t, std::string_view label) {
  return !t.is_preterminal() && t.label == label;
}

bool is_tag(const ParseTree& t, std::string_view tag) {
  return t.is_preterminal() && t.label == tag;
}

bool is_any_phrase(const ParseTree& t) { return !t.is_preterminal(); }

// Brackets inside leaves are written in treebank escape form so the tree
// survives a bracketed round trip.
std::string escape_leaf(const std::string& word) {
  std::string out;
  for (char c : word) {
    if (c == '(') {
      out += "-LRB-";
    } else if (c == ')') {
      out += "-RRB-";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

ParseTree preterminal(std::string tag, std::string word) {
  std::vector<ParseTree> kids;
  kids.push_back(ParseTree::leaf(escape_leaf(word)));
  return ParseTree::node(std::move(tag), std::move(kids));
}

std::vector<ParseTree> chunk_noun_phrases(std::vector<ParseTree> pre) {
  std::vector<ParseTree> items;
  std::size_t i = 0;
  while (i < pre.size()) {
    const std::string& tag = pre[i].label;
    if (tag == "PRP" || tag == "EX") {
      items.push_back(ParseTree::node("NP", {std::move(pre[i])}));
      ++i;
      continue;
    }
    const bool det = tag == "DT" || tag == "PRP$";
    if (!det && !kNominalModifier.count(tag)) {
      items.push_back(std::move(pre[i]));
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < pre.size() && kNominalModifier.count(pre[end].label)) ++end;
    std::size_t head = end;
    for (std::size_t k = end; k > i; --k) {
      if (kNominalHead.count(pre[k - 1].label)) {
        head = k - 1;
        break;
      }
    }
    if (head == end && det && end == i + 1) {
      // A bare determiner stands alone as a pronominal NP ("all", "this").
      items.push_back(ParseTree::node("NP", {std::move(pre[i])}));
    } else if (head == end) {
      for (std::size_t k = i; k < end; ++k) items.push_back(std::move(pre[k]));
    } else {
      std::vector<ParseTree> kids;
      for (std::size_t k = i; k <= head; ++k) kids.push_back(std::move(pre[k]));
      items.push_back(ParseTree::node("NP", std::move(kids)));
      for (std::size_t k = head + 1; k < end; ++k) items.push_back(std::move(pre[k]));
    }
    i = end;
  }
  return items;
}

// NP (, NP)* CC NP  ->  NP
std::vector<ParseTree> coordinate(std::vector<ParseTree> items) {
  std::vector<ParseTree> out;
  std::size_t i = 0;
  while (i < items.size()) {
    if (is_phrase(items[i], "NP")) {
      std::size_t j = i + 1;
      while (j + 1 < items.size() && is_tag(items[j], ",") && is_phrase(items[j + 1], "NP")) {
        j += 2;
      }
      if (j + 1 < items.size() && is_tag(items[j], "CC") && is_phrase(items[j + 1], "NP")) {
        std::vector<ParseTree> kids;
        for (std::size_t k = i; k <= j + 1; ++k) kids.push_back(std::move(items[k]));
        out.push_back(ParseTree::node("NP", std::move(kids)));
        i = j + 2;
        continue;
      }
    }
    out.push_back(std::move(items[i]));
    ++i;
  }
  return out;
}

std::vector<ParseTree> form_prepositional(std::vector<ParseTree> items) {
  for (std::size_t i = items.size(); i-- > 0;) {
    if (i + 1 < items.size() && (is_tag(items[i], "IN") || is_tag(items[i], "TO")) &&
        (is_phrase(items[i + 1], "NP") || is_phrase(items[i + 1], "S"))) {
      std::vector<ParseTree> kids;
      kids.push_back(std::move(items[i]));
      kids.push_back(std::move(items[i + 1]));
      items[i] = ParseTree::node("PP", std::move(kids));
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
  }
  return items;
}

std::vector<ParseTree> attach_prepositional(std::vector<ParseTree> items) {
  std::vector<ParseTree> out;
  std::size_t i = 0;
  while (i < items.size()) {
    if (is_phrase(items[i], "NP") && i + 1 < items.size() && is_phrase(items[i + 1], "PP")) {
      std::vector<ParseTree> kids;
      kids.push_back(std::move(items[i]));
      std::size_t j = i + 1;
      while (j < items.size() && is_phrase(items[j], "PP")) kids.push_back(std::move(items[j++]));
      out.push_back(ParseTree::node("NP", std::move(kids)));
      i = j;
      continue;
    }
    out.push_back(std::move(items[i]));
    ++i;
  }
  return out;
}

// (MD|VB*) (RB)* (VB*)* followed by phrases -> VP; NP VP -> S. Built
// right to left so a verb group can take a following clause as complement.
std::vector<ParseTree> form_clauses(std::vector<ParseTree> items) {
  std::vector<ParseTree> grouped;
  std::vector<bool> verb_group;
  std::size_t i = 0;
  while (i < items.size()) {
    if (items[i].is_preterminal() && kVerbs.count(items[i].label)) {
      std::vector<ParseTree> kids;
      std::size_t j = i;
      while (j < items.size() && items[j].is_preterminal() &&
             (kVerbs.count(items[j].label) || items[j].label == "RB" ||
              items[j].label == "VBN" || items[j].label == "VBG")) {
        kids.push_back(std::move(items[j++]));
      }
      grouped.push_back(ParseTree::node("VP", std::move(kids)));
      verb_group.push_back(true);
      i = j;
      continue;
    }
    grouped.push_back(std::move(items[i++]));
    verb_group.push_back(false);
  }

  std::deque<ParseTree> suffix;
  for (std::size_t k = grouped.size(); k-- > 0;) {
    if (!verb_group[k]) {
      suffix.push_front(std::move(grouped[k]));
      continue;
    }
    ParseTree vp = std::move(grouped[k]);
    while (!suffix.empty() && is_any_phrase(suffix.front())) {
      vp.children.push_back(std::move(suffix.front()));
      suffix.pop_front();
    }
    if (k > 0 && !verb_group[k - 1] && is_phrase(grouped[k - 1], "NP")) {
      std::vector<ParseTree> kids;
      kids.push_back(std::move(grouped[k - 1]));
      kids.push_back(std::move(vp));
      suffix.push_front(ParseTree::node("S", std::move(kids)));
      --k;
    } else {
      suffix.push_front(std::move(vp));
    }
  }
  return {std::make_move_iterator(suffix.begin()), std::make_move_iterator(suffix.end())};
}

// X : Y with phrasal X and Y -> one constituent labeled after X.
std::vector<ParseTree> join_colon(std::vector<ParseTree> items) {
  if (items.size() == 3 && is_any_phrase(items[0]) && is_tag(items[1], ":") &&
      is_any_phrase(items[2])) {
    std::string label = items[0].label;
    return {ParseTree::node(std::move(label), std::move(items))};
  }
  return items;
}

}  // namespace

std::vector<std::string> shallow_tokens(std::string_view sentence) {
  std::vector<std::string> out;
  for (const auto& chunk : text::split_whitespace(text::normalize_spacing(sentence))) {
    if (is_punct_token(chunk)) {
      out.push_back(chunk);
      continue;
    }
    std::size_t b = 0;
    std::size_t e = chunk.size();
    std::vector<std::string> trailing;
    while (b < e && std::string_view("([{\"'`").find(chunk[b]) != std::string_view::npos) {
      out.emplace_back(1, chunk[b++]);
    }
    while (e > b && std::string_view(",.;:?!)]}\"'").find(chunk[e - 1]) != std::string_view::npos) {
      trailing.emplace_back(1, chunk[--e]);
    }
    if (e > b) out.push_back(chunk.substr(b, e - b));
    out.insert(out.end(), trailing.rbegin(), trailing.rend());
  }
  return out;
}

std::string shallow_pos_tag(std::string_view token) {
  if (is_punct_token(token)) return std::string(punct_tag(token));
  const std::string w = text::to_lower(token);
  if (const auto dash = w.rfind('-'); dash != std::string::npos && dash + 1 < w.size() && dash > 0) {
    if (closed_class().count(w)) return tag_plain(w);
    // Hyphenated compounds take the category of their last component,
    // with function-word tails read as adjectival.
    std::string tail = tag_plain(std::string_view(w).substr(dash + 1));
    if (!kNominalModifier.count(tail)) return "JJ";
    return tail;
  }
  return tag_plain(w);
}

ParseTree ShallowParser::parse(std::string_view sentence) const {
  const auto tokens = shallow_tokens(sentence);
  if (tokens.empty()) throw ValidationError("cannot parse an empty sentence");

  std::vector<ParseTree> pre;
  pre.reserve(tokens.size());
  for (const auto& t : tokens) pre.push_back(preterminal(shallow_pos_tag(t), t));

  auto items = chunk_noun_phrases(std::move(pre));
  items = coordinate(std::move(items));
  items = form_prepositional(std::move(items));
  items = attach_prepositional(std::move(items));
  items = coordinate(std::move(items));
  items = form_clauses(std::move(items));
  items = form_prepositional(std::move(items));
  items = attach_prepositional(std::move(items));
  items = join_colon(std::move(items));

  // Sentence-final punctuation hangs off the root constituent.
  std::vector<ParseTree> final_punct;
  while (items.size() > 1 && is_tag(items.back(), ".")) {
    final_punct.insert(final_punct.begin(), std::move(items.back()));
    items.pop_back();
  }

  ParseTree top;
  if (items.size() == 1 && is_any_phrase(items.front())) {
    top = std::move(items.front());
  } else {
    top = ParseTree::node("FRAG", std::move(items));
  }
  for (auto& p : final_punct) top.children.push_back(std::move(p));
  return ParseTree::node("ROOT", {std::move(top)});
}

std::vector<std::optional<ParseTree>> ShallowParser::parse_each(
    const std::vector<std::string>& sentences) const {
  std::vector<std::optional<ParseTree>> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) {
    if (text::trim(s).empty()) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(parse(s));
    }
  }
  return out;
}

}  // namespace titlegen
