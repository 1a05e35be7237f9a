#include "titlegen/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>

#include "titlegen/error.hpp"
#include "titlegen/text.hpp"

namespace titlegen::metrics {
namespace {

// Punctuation tokens are split off and dropped.
std::vector<std::string> words_of(const std::string& s, const char* what) {
  std::vector<std::string> w;
  for (auto& t : text::lower_word_tokens(s)) {
    if (text::is_word_token(t)) w.push_back(std::move(t));
  }
  if (w.empty()) throw ValidationError(std::string(what) + " is empty");
  return w;
}

double harmonic(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

template <class Key>
std::size_t clipped_overlap(const std::vector<Key>& cand, const std::vector<Key>& ref) {
  std::map<Key, std::size_t> ref_counts;
  for (const auto& k : ref) ++ref_counts[k];
  std::size_t hits = 0;
  for (const auto& k : cand) {
    auto it = ref_counts.find(k);
    if (it != ref_counts.end() && it->second > 0) {
      --it->second;
      ++hits;
    }
  }
  return hits;
}

std::vector<std::pair<std::string, std::string>> bigrams(const std::vector<std::string>& w) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) out.emplace_back(w[i], w[i + 1]);
  return out;
}

// Power iteration on a weighted graph: rows of `weights` are normalized,
// dangling rows spread uniformly.
std::vector<double> stationary(const std::vector<std::vector<double>>& weights,
                               const RankOptions& opt) {
  const std::size_t n = weights.size();
  std::vector<double> row_sum(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (double w : weights[i]) row_sum[i] += w;
  }
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  const double teleport = (1.0 - opt.damping) / static_cast<double>(n);
  for (std::size_t iter = 0; iter < opt.max_iterations; ++iter) {
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_sum[i] == 0.0) dangling += p[i];
    }
    std::vector<double> next(n, teleport + opt.damping * dangling / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (row_sum[i] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (weights[i][j] != 0.0) next[j] += opt.damping * p[i] * weights[i][j] / row_sum[i];
      }
    }
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - p[i]);
    p = std::move(next);
    if (delta < opt.tolerance) break;
  }
  return p;
}

std::string top_k(const std::vector<std::string>& sentences, const std::vector<double>& scores,
                  std::size_t k) {
  std::vector<std::size_t> order(sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Scores within this margin count as tied so float noise cannot beat
  // the earliest-sentence rule.
  constexpr double kTie = 1e-12;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b] + kTie;
  });
  std::string out;
  for (std::size_t i = 0; i < std::min(k, order.size()); ++i) {
    if (!out.empty()) out.push_back(' ');
    out += sentences[order[i]];
  }
  return out;
}

void require_sentences(const std::vector<std::string>& sentences) {
  if (sentences.empty()) throw ValidationError("no sentences to rank");
}

std::size_t whitespace_words(const std::string& s) { return text::split_whitespace(s).size(); }

}  // namespace

PrfScore rouge1(const std::string& candidate, const std::string& reference) {
  const auto c = words_of(candidate, "candidate");
  const auto r = words_of(reference, "reference");
  const double hits = static_cast<double>(clipped_overlap(c, r));
  PrfScore s;
  s.precision = hits / static_cast<double>(c.size());
  s.recall = hits / static_cast<double>(r.size());
  s.f1 = harmonic(s.precision, s.recall);
  return s;
}

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

PrfScore rougeL(const std::string& candidate, const std::string& reference) {
  const auto c = words_of(candidate, "candidate");
  const auto r = words_of(reference, "reference");
  const double lcs = static_cast<double>(lcs_length(c, r));
  PrfScore s;
  s.precision = lcs / static_cast<double>(c.size());
  s.recall = lcs / static_cast<double>(r.size());
  s.f1 = harmonic(s.precision, s.recall);
  return s;
}

double bleu2(const std::string& candidate, const std::string& reference) {
  const auto c = words_of(candidate, "candidate");
  const auto r = words_of(reference, "reference");
  const double len = static_cast<double>(c.size());
  const double smoothed = 1.0 / (2.0 * len);

  double p1 = static_cast<double>(clipped_overlap(c, r)) / len;
  const auto cb = bigrams(c);
  double p2 = cb.empty() ? 0.0
                         : static_cast<double>(clipped_overlap(cb, bigrams(r))) /
                               static_cast<double>(cb.size());
  if (p1 == 0.0) p1 = smoothed;
  if (p2 == 0.0) p2 = smoothed;

  const double bp = c.size() < r.size() ? std::exp(1.0 - static_cast<double>(r.size()) / len) : 1.0;
  return bp * std::exp(0.5 * std::log(p1) + 0.5 * std::log(p2));
}

std::vector<double> lexrank_scores(const std::vector<std::string>& sentences,
                                   const RankOptions& opt) {
  require_sentences(sentences);
  const std::size_t n = sentences.size();
  std::vector<std::unordered_map<std::string, double>> tf(n);
  std::unordered_map<std::string, double> df;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& w : text::lower_word_tokens(sentences[i])) {
      if (!text::is_word_token(w)) continue;
      tf[i][w] += 1.0;
    }
    for (const auto& [w, c] : tf[i]) df[w] += 1.0;
  }
  // Smoothed idf keeps terms shared by every sentence from vanishing.
  auto idf = [&](const std::string& w) {
    return 1.0 + std::log(static_cast<double>(n) / df[w]);
  };
  std::vector<double> norm(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [w, c] : tf[i]) norm[i] += (c * idf(w)) * (c * idf(w));
    norm[i] = std::sqrt(norm[i]);
  }

  std::vector<std::vector<double>> weights(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norm[i] == 0.0 || norm[j] == 0.0) continue;
      double dot = 0.0;
      for (const auto& [w, c] : tf[i]) {
        auto it = tf[j].find(w);
        if (it != tf[j].end()) dot += c * it->second * idf(w) * idf(w);
      }
      const double sim = dot / (norm[i] * norm[j]);
      if (sim >= opt.similarity_threshold) weights[i][j] = weights[j][i] = sim;
    }
  }
  return stationary(weights, opt);
}

std::vector<double> textrank_scores(const std::vector<std::string>& sentences,
                                    const RankOptions& opt) {
  require_sentences(sentences);
  const std::size_t n = sentences.size();
  std::vector<std::set<std::string>> words(n);
  std::vector<std::size_t> lengths(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t len = 0;
    for (const auto& w : text::lower_word_tokens(sentences[i])) {
      if (!text::is_word_token(w)) continue;
      words[i].insert(w);
      ++len;
    }
    lengths[i] = len;
  }
  std::vector<std::vector<double>> weights(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lengths[i] <= 1 || lengths[j] <= 1) continue;
      std::size_t overlap = 0;
      for (const auto& w : words[i]) overlap += words[j].count(w);
      const double sim = static_cast<double>(overlap) /
                         (std::log(static_cast<double>(lengths[i])) +
                          std::log(static_cast<double>(lengths[j])));
      weights[i][j] = weights[j][i] = sim;
    }
  }
  return stationary(weights, opt);
}

std::string lexrank_summary(const std::vector<std::string>& sentences, std::size_t k,
                            const RankOptions& opt) {
  return top_k(sentences, lexrank_scores(sentences, opt), k);
}

std::string textrank_summary(const std::vector<std::string>& sentences, std::size_t k,
                             const RankOptions& opt) {
  require_sentences(sentences);
  if (sentences.size() == 1) return sentences.front();
  return top_k(sentences, textrank_scores(sentences, opt), k);
}

std::vector<MetricReport> benchmark(const std::vector<PaperRecord>& records,
                                    const std::vector<NamedSystem>& systems,
                                    std::ostream* warnings) {
  if (records.empty()) throw ValidationError("benchmark needs at least one record");
  std::vector<MetricReport> reports;
  for (const auto& system : systems) {
    MetricReport rep;
    rep.system_name = system.name;
    double words = 0, r1 = 0, rl = 0, b2 = 0;
    for (const auto& record : records) {
      try {
        const std::string out = system.generate(record);
        const double r1_f = rouge1(out, record.title).f1;
        const double rl_f = rougeL(out, record.title).f1;
        const double b = bleu2(out, record.title);
        words += static_cast<double>(whitespace_words(out));
        r1 += r1_f;
        rl += rl_f;
        b2 += b;
        ++rep.n_items;
      } catch (const std::exception& e) {
        ++rep.n_failed;
        if (warnings) {
          *warnings << "warning: " << system.name << " failed on " << record.id << ": "
                    << e.what() << '\n';
        }
      }
    }
    if (rep.n_items == 0) {
      throw ValidationError("system '" + system.name + "' failed on every record");
    }
    const double n = static_cast<double>(rep.n_items);
    rep.avg_words = words / n;
    rep.rouge1_f = r1 / n;
    rep.rougeL_f = rl / n;
    rep.bleu2 = b2 / n;
    reports.push_back(rep);
  }
  return reports;
}

void write_csv(std::ostream& out, const std::vector<MetricReport>& reports) {
  out << "system,avg_words,rouge1_f,rougeL_f,bleu2,n_items\n";
  for (const auto& r : reports) {
    out << r.system_name << ',' << std::fixed << std::setprecision(4) << r.avg_words << ','
        << r.rouge1_f << ',' << r.rougeL_f << ',' << r.bleu2 << ',' << r.n_items << '\n';
  }
  out.unsetf(std::ios::floatfield);
}

void write_table(std::ostream& out, const std::vector<MetricReport>& reports) {
  out << "ROUGE values are F1; BLEU-2 smoothed for zero n-gram counts\n";
  out << std::left << std::setw(12) << "system" << std::right << std::setw(10) << "avg_words"
      << std::setw(10) << "ROUGE-1" << std::setw(10) << "ROUGE-L" << std::setw(10) << "BLEU-2"
      << std::setw(8) << "n" << '\n';
  for (const auto& r : reports) {
    out << std::left << std::setw(12) << r.system_name << std::right << std::fixed
        << std::setprecision(1) << std::setw(10) << r.avg_words << std::setprecision(4)
        << std::setw(10) << r.rouge1_f << std::setw(10) << r.rougeL_f << std::setw(10)
        << r.bleu2 << std::setw(8) << r.n_items << '\n';
  }
  out.unsetf(std::ios::floatfield);
}

}  // namespace titlegen::metrics
