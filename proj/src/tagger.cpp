#include "titlegen/tagger.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "titlegen/error.hpp"
#include "titlegen/parts.hpp"
#include "titlegen/subprocess.hpp"
#include "titlegen/text.hpp"

namespace titlegen {
namespace {

using json = nlohmann::json;

std::uint64_t sum_of(const std::map<std::string, std::uint64_t>& m) {
  std::uint64_t s = 0;
  for (const auto& [k, v] : m) s += v;
  return s;
}

std::size_t distance_to_range(std::size_t n, std::size_t lo, std::size_t hi) {
  if (n < lo) return lo - n;
  if (n > hi) return n - hi;
  return 0;
}

}  // namespace

std::size_t TaggerModel::distinct_tokens() const {
  std::set<std::string_view> seen;
  for (const auto& [k, v] : title_counts) seen.insert(k);
  for (const auto& [k, v] : nontitle_counts) seen.insert(k);
  return seen.size();
}

void TaggerModel::save(const std::filesystem::path& path) const {
  json j;
  j["smoothing_alpha"] = smoothing_alpha;
  j["total_title"] = total_title;
  j["total_nontitle"] = total_nontitle;
  j["title_counts"] = title_counts;
  j["nontitle_counts"] = nontitle_counts;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(1) << '\n';
}

TaggerModel TaggerModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  TaggerModel m;
  try {
    const json j = json::parse(in);
    m.smoothing_alpha = j.at("smoothing_alpha").get<double>();
    m.total_title = j.at("total_title").get<std::uint64_t>();
    m.total_nontitle = j.at("total_nontitle").get<std::uint64_t>();
    m.title_counts = j.at("title_counts").get<std::map<std::string, std::uint64_t>>();
    m.nontitle_counts = j.at("nontitle_counts").get<std::map<std::string, std::uint64_t>>();
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": bad tagger model (" + e.what() + ")");
  }
  if (!(m.smoothing_alpha > 0)) throw ValidationError("smoothing must be positive");
  if (sum_of(m.title_counts) != m.total_title ||
      sum_of(m.nontitle_counts) != m.total_nontitle) {
    throw ValidationError(path.string() + ": totals do not match counts");
  }
  return m;
}

std::size_t KeywordMask::selected_count() const {
  std::size_t n = 0;
  for (bool b : selected) n += b ? 1 : 0;
  return n;
}

TaggerModel train_tagger(const std::vector<LabeledTokenSeq>& pairs, double alpha) {
  if (!(alpha > 0)) throw ValidationError("smoothing must be positive");
  if (pairs.empty()) throw ValidationError("train_tagger needs at least one pair");
  TaggerModel m;
  m.smoothing_alpha = alpha;
  for (const auto& pair : pairs) {
    if (pair.labels.size() != pair.tokens.size()) {
      throw ValidationError("labels and tokens differ in length");
    }
    for (std::size_t i = 0; i < pair.tokens.size(); ++i) {
      const std::string key = pair.tokens.pieces[i].serialized();
      if (pair.labels[i] == 1) {
        ++m.title_counts[key];
        ++m.total_title;
      } else {
        ++m.nontitle_counts[key];
        ++m.total_nontitle;
      }
    }
  }
  return m;
}

namespace {

double log_odds(const TaggerModel& model, const std::string& key, double v) {
  const double a = model.smoothing_alpha;
  auto count = [](const auto& m, const std::string& k) {
    const auto it = m.find(k);
    return it == m.end() ? 0.0 : static_cast<double>(it->second);
  };
  const double p_title = (count(model.title_counts, key) + a) /
                         (static_cast<double>(model.total_title) + a * v);
  const double p_other = (count(model.nontitle_counts, key) + a) /
                         (static_cast<double>(model.total_nontitle) + a * v);
  return std::log(p_title) - std::log(p_other);
}

double type_count(const TaggerModel& model) {
  return static_cast<double>(std::max<std::size_t>(model.distinct_tokens(), 1));
}

}  // namespace

double score_token(const TaggerModel& model, const std::string& key) {
  return log_odds(model, key, type_count(model));
}

std::vector<double> score_tokens(const TaggerModel& model, const TokenSeq& tokens) {
  const double v = type_count(model);
  std::vector<double> out;
  out.reserve(tokens.size());
  for (const auto& p : tokens.pieces) out.push_back(log_odds(model, p.serialized(), v));
  return out;
}

std::vector<double> ReferenceTokenScorer::score(const TokenSeq& tokens) const {
  return score_tokens(model_, tokens);
}

ExternalTokenScorer::ExternalTokenScorer(std::string command)
    : command_(std::move(command)) {}

ExternalTokenScorer::~ExternalTokenScorer() = default;

std::vector<double> ExternalTokenScorer::score(const TokenSeq& tokens) const {
  std::lock_guard lock(mutex_);
  if (!child_) child_ = std::make_unique<ChildProcess>(command_);

  std::string request;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) request.push_back('\t');
    request += tokens.pieces[i].serialized();
  }
  std::string response;
  try {
    child_->write_line(request);
    if (!child_->read_line(response)) {
      throw ExternalError("token scorer '" + command_ + "' closed its output");
    }
  } catch (const ExternalError&) {
    child_.reset();
    throw;
  }

  std::vector<double> scores;
  for (const auto& field : text::split_whitespace(response)) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw ExternalError("token scorer returned a non-numeric score '" + field + "'");
    }
    scores.push_back(v);
  }
  if (scores.size() != tokens.size()) {
    throw ExternalError("token scorer returned " + std::to_string(scores.size()) +
                        " scores for " + std::to_string(tokens.size()) + " tokens");
  }
  return scores;
}

KeywordMask select_keywords(const std::vector<double>& scores, double threshold) {
  KeywordMask mask;
  mask.scores = scores;
  mask.threshold_used = threshold;
  mask.selected.reserve(scores.size());
  for (double s : scores) mask.selected.push_back(s >= threshold);
  return mask;
}

KeywordMask adaptive_threshold(const std::vector<double>& scores, const TokenSeq& tokens,
                               const AdaptiveThresholdOptions& opt) {
  if (tokens.empty()) throw ValidationError("adaptive_threshold needs tokens");
  if (scores.size() != tokens.size()) {
    throw ValidationError("scores and tokens differ in length");
  }

  struct Visit {
    long step_index;
    KeywordMask mask;
    std::size_t parts;
  };
  std::vector<Visit> visited;
  std::set<long> seen;
  long k = 0;
  for (std::size_t iter = 0; iter < opt.max_iters; ++iter) {
    if (!seen.insert(k).second) break;
    KeywordMask mask = select_keywords(scores, opt.base + static_cast<double>(k) * opt.step);
    const std::size_t n = generate_title_parts(tokens, mask).size();
    visited.push_back({k, std::move(mask), n});
    if (n > opt.max_parts) {
      ++k;
    } else if (n < opt.min_parts) {
      --k;
    } else {
      return std::move(visited.back().mask);
    }
  }

  const Visit* best = &visited.front();
  for (const auto& v : visited) {
    const auto d = distance_to_range(v.parts, opt.min_parts, opt.max_parts);
    const auto best_d = distance_to_range(best->parts, opt.min_parts, opt.max_parts);
    if (d < best_d || (d == best_d && v.step_index > best->step_index)) best = &v;
  }
  return best->mask;
}

KeywordMask adaptive_threshold(const TokenScorer& backend, const TokenSeq& tokens,
                               const AdaptiveThresholdOptions& options) {
  if (tokens.empty()) throw ValidationError("adaptive_threshold needs tokens");
  return adaptive_threshold(backend.score(tokens), tokens, options);
}

}  // namespace titlegen
