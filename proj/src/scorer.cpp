#include "titlegen/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "titlegen/error.hpp"
#include "titlegen/subprocess.hpp"
#include "titlegen/text.hpp"

namespace titlegen {
namespace {

using json = nlohmann::json;

constexpr double kMaxLogit = 30.0;
constexpr double kCalibA[] = {0.5, 1.0, 2.0, 4.0, 8.0};

double logistic(double logit) {
  logit = std::clamp(logit, -kMaxLogit, kMaxLogit);
  return 1.0 / (1.0 + std::exp(-logit));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step over (seed, index).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool has_two_orderings(const std::vector<std::string>& words) {
  return words.size() >= 2 &&
         std::any_of(words.begin(), words.end(),
                     [&](const std::string& w) { return w != words.front(); });
}

}  // namespace

void TitleScorerModel::rebuild_totals() {
  context_counts.clear();
  for (const auto& [bigram, n] : bigram_counts) context_counts[bigram.first] += n;
  total_tokens = 0;
  for (const auto& [w, n] : unigram_counts) total_tokens += n;
}

double TitleScorerModel::probability(const std::string& previous, const std::string& word) const {
  const double v = static_cast<double>(vocab_size);
  auto lookup = [](const auto& m, const auto& key) {
    const auto it = m.find(key);
    return it == m.end() ? 0.0 : static_cast<double>(it->second);
  };
  const double p_bigram = (lookup(bigram_counts, std::make_pair(previous, word)) + 1.0) /
                          (lookup(context_counts, previous) + v);
  const double p_unigram =
      (lookup(unigram_counts, word) + 1.0) / (static_cast<double>(total_tokens) + v);
  return interpolation_lambda * p_bigram + (1.0 - interpolation_lambda) * p_unigram;
}

double TitleScorerModel::mean_log_ratio(std::string_view input) const {
  const auto words = text::lower_word_tokens(input);
  // Punctuation stays in the model but cannot make a title on its own.
  if (std::none_of(words.begin(), words.end(), text::is_word_token)) {
    throw ValidationError("cannot score an empty title");
  }
  const double log_v = std::log(static_cast<double>(vocab_size));
  double sum = 0.0;
  std::string previous(kBos);
  for (const auto& w : words) {
    sum += std::log(probability(previous, w)) + log_v;
    previous = w;
  }
  sum += std::log(probability(previous, std::string(kEos))) + log_v;
  return sum / static_cast<double>(words.size() + 1);
}

void TitleScorerModel::save(const std::filesystem::path& path) const {
  json j;
  j["interpolation_lambda"] = interpolation_lambda;
  j["calibration"] = {{"a", calib_a}, {"b", calib_b}};
  j["vocab_size"] = vocab_size;
  j["unigram_counts"] = unigram_counts;
  json bigrams = json::array();
  for (const auto& [bg, n] : bigram_counts) bigrams.push_back({bg.first, bg.second, n});
  j["bigram_counts"] = std::move(bigrams);
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(1) << '\n';
}

TitleScorerModel TitleScorerModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  TitleScorerModel m;
  try {
    const json j = json::parse(in);
    m.interpolation_lambda = j.at("interpolation_lambda").get<double>();
    m.calib_a = j.at("calibration").at("a").get<double>();
    m.calib_b = j.at("calibration").at("b").get<double>();
    m.vocab_size = j.at("vocab_size").get<std::uint64_t>();
    m.unigram_counts = j.at("unigram_counts").get<std::map<std::string, std::uint64_t>>();
    for (const auto& e : j.at("bigram_counts")) {
      m.bigram_counts[{e.at(0).get<std::string>(), e.at(1).get<std::string>()}] =
          e.at(2).get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": bad scorer model (" + e.what() + ")");
  }
  if (!(m.interpolation_lambda > 0 && m.interpolation_lambda < 1)) {
    throw ValidationError("interpolation lambda must lie in (0,1)");
  }
  if (m.vocab_size < 1) throw ValidationError("vocab_size must be positive");
  m.rebuild_totals();
  return m;
}

std::vector<double> TitleScorer::evaluate_batch(const std::vector<std::string>& texts) const {
  std::vector<double> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(evaluate(t));
  return out;
}

double ReferenceTitleScorer::evaluate(const std::string& text) const {
  return evaluate_title(model_, text);
}

double ExternalTitleScorer::evaluate(const std::string& text) const {
  return evaluate_batch({text}).front();
}

std::vector<double> ExternalTitleScorer::evaluate_batch(
    const std::vector<std::string>& texts) const {
  if (texts.empty()) return {};
  const auto lines = run_line_filter(command_, texts);
  if (lines.size() != texts.size()) {
    throw ExternalError("title scorer returned " + std::to_string(lines.size()) +
                        " scores for " + std::to_string(texts.size()) + " candidates");
  }
  std::vector<double> out;
  out.reserve(lines.size());
  for (const auto& l : lines) {
    const std::string field = text::trim(l);
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || *end != '\0' || !(v >= 0.0 && v <= 1.0)) {
      throw ExternalError("title scorer returned an invalid score '" + field + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::string shuffle_title_words(const std::string& title, std::uint64_t seed) {
  PaperRecord r;
  r.title = title;
  r.abstract_sentences = {title};
  return make_eval_negatives(r, seed).shuffled_title;
}

std::vector<LabeledTitle> build_training_set(const std::vector<PaperRecord>& records,
                                             std::uint64_t seed) {
  std::vector<LabeledTitle> items;
  items.reserve(records.size() * 3);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    items.push_back({r.title, 1, TitleKind::kRealTitle});
    items.push_back({r.abstract_sentences.front(), 0, TitleKind::kFirstSentence});
    if (has_two_orderings(text::split_whitespace(r.title))) {
      items.push_back({make_eval_negatives(r, mix_seed(seed, i)).shuffled_title, 0,
                       TitleKind::kShuffledTitle});
    }
  }
  return items;
}

std::vector<LabeledTitle> title_items(const std::vector<std::string>& titles,
                                      std::uint64_t seed) {
  std::vector<LabeledTitle> items;
  for (std::size_t i = 0; i < titles.size(); ++i) {
    items.push_back({titles[i], 1, TitleKind::kRealTitle});
    if (has_two_orderings(text::split_whitespace(titles[i]))) {
      items.push_back({shuffle_title_words(titles[i], mix_seed(seed, i)), 0,
                       TitleKind::kShuffledTitle});
    }
  }
  return items;
}

TitleScorerModel train_scorer(const std::vector<LabeledTitle>& items, double lambda) {
  if (!(lambda > 0 && lambda < 1)) throw ValidationError("lambda must lie in (0,1)");
  const bool any_pos = std::any_of(items.begin(), items.end(),
                                   [](const LabeledTitle& t) { return t.label == 1; });
  const bool any_neg = std::any_of(items.begin(), items.end(),
                                   [](const LabeledTitle& t) { return t.label == 0; });
  if (!any_pos || !any_neg) {
    throw ValidationError("train_scorer needs at least one positive and one negative item");
  }

  TitleScorerModel m;
  m.interpolation_lambda = lambda;
  std::set<std::string> words;
  for (const auto& item : items) {
    if (item.label != 1) continue;
    const auto tokens = text::lower_word_tokens(item.text);
    if (tokens.empty()) continue;
    std::string previous(kBos);
    for (const auto& w : tokens) {
      ++m.bigram_counts[{previous, w}];
      ++m.unigram_counts[w];
      words.insert(w);
      previous = w;
    }
    ++m.bigram_counts[{previous, std::string(kEos)}];
    ++m.unigram_counts[std::string(kEos)];
  }
  m.vocab_size = words.size() + 2;
  m.rebuild_totals();

  std::vector<double> features;
  std::vector<int> labels;
  for (const auto& item : items) {
    if (text::lower_word_tokens(item.text).empty()) continue;
    features.push_back(m.mean_log_ratio(item.text));
    labels.push_back(item.label);
  }

  std::size_t best_correct = 0;
  bool have_best = false;
  for (double a : kCalibA) {
    for (int step = -8; step <= 8; ++step) {
      const double b = 0.5 * step;
      std::size_t correct = 0;
      for (std::size_t i = 0; i < features.size(); ++i) {
        const int predicted = logistic(a * (features[i] - b)) >= 0.5 ? 1 : 0;
        correct += predicted == labels[i] ? 1 : 0;
      }
      // Strict improvement keeps the smallest a, then the smallest b.
      if (!have_best || correct > best_correct) {
        have_best = true;
        best_correct = correct;
        m.calib_a = a;
        m.calib_b = b;
      }
    }
  }
  return m;
}

double evaluate_title(const TitleScorerModel& model, std::string_view text) {
  return logistic(model.calib_a * (model.mean_log_ratio(text) - model.calib_b));
}

double appropriateness_ratio(const TitleScorer& scorer, const std::vector<std::string>& titles,
                             double threshold) {
  if (titles.empty()) throw ValidationError("appropriateness_ratio needs at least one title");
  const auto scores = scorer.evaluate_batch(titles);
  const auto hits = std::count_if(scores.begin(), scores.end(),
                                  [&](double s) { return s >= threshold; });
  return static_cast<double>(hits) / static_cast<double>(titles.size());
}

double appropriateness_ratio(const TitleScorerModel& model,
                             const std::vector<std::string>& titles, double threshold) {
  return appropriateness_ratio(ReferenceTitleScorer(model), titles, threshold);
}

}  // namespace titlegen
