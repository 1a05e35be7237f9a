#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "titlegen/corpus.hpp"

namespace titlegen::metrics {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Word-level metrics over lowercased, punctuation-split tokens.
PrfScore rouge1(const std::string& candidate, const std::string& reference);
PrfScore rougeL(const std::string& candidate, const std::string& reference);
double bleu2(const std::string& candidate, const std::string& reference);

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct RankOptions {
  double damping = 0.85;
  double tolerance = 1e-6;
  std::size_t max_iterations = 100;
  // LexRank only: similarities below this are dropped.
  double similarity_threshold = 0.1;
};

// Stationary scores of the sentence graph (sum to 1).
std::vector<double> lexrank_scores(const std::vector<std::string>& sentences,
                                   const RankOptions& options = {});
std::vector<double> textrank_scores(const std::vector<std::string>& sentences,
                                    const RankOptions& options = {});

// Top-k sentences joined by a space, ordered by score (ties: earliest).
std::string lexrank_summary(const std::vector<std::string>& sentences, std::size_t k = 1,
                            const RankOptions& options = {});
std::string textrank_summary(const std::vector<std::string>& sentences, std::size_t k = 1,
                             const RankOptions& options = {});

struct MetricReport {
  std::string system_name;
  double avg_words = 0.0;
  double rouge1_f = 0.0;
  double rougeL_f = 0.0;
  double bleu2 = 0.0;
  std::size_t n_items = 0;
  std::size_t n_failed = 0;
};

struct NamedSystem {
  std::string name;
  std::function<std::string(const PaperRecord&)> generate;
};

// Runs each system over the records and averages the metrics against the
// true titles. Per-record failures are skipped and counted; a system that
// fails on every record is an error.
std::vector<MetricReport> benchmark(const std::vector<PaperRecord>& records,
                                    const std::vector<NamedSystem>& systems,
                                    std::ostream* warnings = nullptr);

// CSV header: system,avg_words,rouge1_f,rougeL_f,bleu2,n_items
void write_csv(std::ostream& out, const std::vector<MetricReport>& reports);
void write_table(std::ostream& out, const std::vector<MetricReport>& reports);

}  // namespace titlegen::metrics
