#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "titlegen/corpus.hpp"

namespace titlegen {

enum class TitleKind { kRealTitle, kFirstSentence, kShuffledTitle };

struct LabeledTitle {
  std::string text;
  int label = 0;
  TitleKind kind = TitleKind::kRealTitle;
};

// Sentence-boundary symbols of the title language model.
inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";

// Interpolated bigram model over title words plus a two-parameter logistic
// calibration. Scores are logistic(a * (x - b)) where x is the mean
// per-token log-probability relative to a uniform distribution over the
// vocabulary (log p + log vocab_size).
struct TitleScorerModel {
  std::map<std::pair<std::string, std::string>, std::uint64_t> bigram_counts;
  // Predicted-token counts: every title word plus one </s> per title.
  std::map<std::string, std::uint64_t> unigram_counts;
  double interpolation_lambda = 0.7;
  double calib_a = 1.0;
  double calib_b = 0.0;
  // Distinct title words + </s> + one slot for unknown words.
  std::uint64_t vocab_size = 2;

  // Derived on load/train.
  std::map<std::string, std::uint64_t> context_counts;
  std::uint64_t total_tokens = 0;

  void rebuild_totals();

  // P(word | previous) under the interpolated, add-one smoothed model.
  double probability(const std::string& previous, const std::string& word) const;
  // Mean log-probability relative to uniform over the words of `text`
  // plus the end symbol.
  double mean_log_ratio(std::string_view text) const;

  void save(const std::filesystem::path& path) const;
  static TitleScorerModel load(const std::filesystem::path& path);
};

// Title appropriateness in (0, 1).
class TitleScorer {
 public:
  virtual ~TitleScorer() = default;
  virtual double evaluate(const std::string& text) const = 0;
  virtual std::vector<double> evaluate_batch(const std::vector<std::string>& texts) const;
};

class ReferenceTitleScorer : public TitleScorer {
 public:
  explicit ReferenceTitleScorer(TitleScorerModel model) : model_(std::move(model)) {}
  double evaluate(const std::string& text) const override;
  const TitleScorerModel& model() const { return model_; }

 private:
  TitleScorerModel model_;
};

// One candidate per input line, one decimal in [0,1] per output line; the
// child runs once per batch.
class ExternalTitleScorer : public TitleScorer {
 public:
  explicit ExternalTitleScorer(std::string command) : command_(std::move(command)) {}
  double evaluate(const std::string& text) const override;
  std::vector<double> evaluate_batch(const std::vector<std::string>& texts) const override;

 private:
  std::string command_;
};

std::vector<LabeledTitle> build_training_set(const std::vector<PaperRecord>& records,
                                             std::uint64_t seed);

// Positives plus word-shuffled negatives for a titles-only list.
std::vector<LabeledTitle> title_items(const std::vector<std::string>& titles, std::uint64_t seed);

TitleScorerModel train_scorer(const std::vector<LabeledTitle>& items, double lambda = 0.7);

double evaluate_title(const TitleScorerModel& model, std::string_view text);

double appropriateness_ratio(const TitleScorer& scorer, const std::vector<std::string>& titles,
                             double threshold = 0.5);
double appropriateness_ratio(const TitleScorerModel& model,
                             const std::vector<std::string>& titles, double threshold = 0.5);

// Word-level shuffle of a title, never equal to the input; throws when the
// title has no second distinct ordering.
std::string shuffle_title_words(const std::string& title, std::uint64_t seed);

}  // namespace titlegen
