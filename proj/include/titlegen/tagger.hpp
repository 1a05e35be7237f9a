#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "titlegen/corpus.hpp"

namespace titlegen {

class ChildProcess;

// Smoothed log-odds token model: how much more often a piece occurs in
// abstract words that also appear in the title than in those that don't.
// Continuation pieces are keyed by their "##" serialized form.
struct TaggerModel {
  std::map<std::string, std::uint64_t> title_counts;
  std::map<std::string, std::uint64_t> nontitle_counts;
  std::uint64_t total_title = 0;
  std::uint64_t total_nontitle = 0;
  double smoothing_alpha = 1.0;

  // Number of distinct token types across both maps.
  std::size_t distinct_tokens() const;

  void save(const std::filesystem::path& path) const;
  static TaggerModel load(const std::filesystem::path& path);
};

struct KeywordMask {
  std::vector<double> scores;
  std::vector<bool> selected;
  double threshold_used = 0.0;

  std::size_t selected_count() const;
};

// Per-token scoring contract. Output length equals input length and is
// deterministic for a fixed model.
class TokenScorer {
 public:
  virtual ~TokenScorer() = default;
  virtual std::vector<double> score(const TokenSeq& tokens) const = 0;
};

class ReferenceTokenScorer : public TokenScorer {
 public:
  explicit ReferenceTokenScorer(TaggerModel model) : model_(std::move(model)) {}
  std::vector<double> score(const TokenSeq& tokens) const override;
  const TaggerModel& model() const { return model_; }

 private:
  TaggerModel model_;
};

// Talks to a long-lived child process: one request line of tab-separated
// serialized pieces, one response line of space-separated scores.
class ExternalTokenScorer : public TokenScorer {
 public:
  explicit ExternalTokenScorer(std::string command);
  ~ExternalTokenScorer() override;
  std::vector<double> score(const TokenSeq& tokens) const override;

 private:
  std::string command_;
  mutable std::mutex mutex_;
  mutable std::unique_ptr<ChildProcess> child_;
};

TaggerModel train_tagger(const std::vector<LabeledTokenSeq>& pairs, double alpha);

std::vector<double> score_tokens(const TaggerModel& model, const TokenSeq& tokens);
double score_token(const TaggerModel& model, const std::string& serialized_piece);

KeywordMask select_keywords(const std::vector<double>& scores, double threshold);

struct AdaptiveThresholdOptions {
  double base = -0.5;
  std::size_t min_parts = 3;
  std::size_t max_parts = 6;
  double step = 0.1;
  std::size_t max_iters = 100;
};

// Moves the threshold in fixed steps until the number of title parts lands
// in [min_parts, max_parts]; stops early on a revisited threshold. Returns
// the visited mask whose part count is nearest the interval (ties go to the
// higher threshold).
KeywordMask adaptive_threshold(const TokenScorer& backend, const TokenSeq& tokens,
                               const AdaptiveThresholdOptions& options = {});
KeywordMask adaptive_threshold(const std::vector<double>& scores, const TokenSeq& tokens,
                               const AdaptiveThresholdOptions& options = {});

}  // namespace titlegen
