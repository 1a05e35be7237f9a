#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "properties.hpp"
#include "titlegen/metrics.hpp"
#include "titlegen/corpus.hpp"

namespace {

using namespace titlegen;
using titlegen::testing::PropertyResult;

constexpr std::size_t kCases = 1000;

void expect_ok(const PropertyResult& r) {
  EXPECT_GE(r.cases, kCases);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(PropertyTest, TokenizeRoundTrip) { expect_ok(titlegen::testing::check_round_trip(11, kCases)); }

TEST(PropertyTest, ThresholdMonotonicity) {
  expect_ok(titlegen::testing::check_threshold_monotonicity(12, kCases));
}

TEST(PropertyTest, BankMonotonicity) {
  expect_ok(titlegen::testing::check_bank_monotonicity(13, kCases));
}

TEST(PropertyTest, GateSoundness) { expect_ok(titlegen::testing::check_gate_soundness(14, kCases)); }

TEST(PropertyTest, RankingOrder) { expect_ok(titlegen::testing::check_ranking_order(15, kCases)); }

std::string random_sentence(std::mt19937_64& rng) {
  static const std::vector<std::string> words = {"robot", "map", "learning", "graph", "deep",
                                                 "model", "of", "the", "fast", "sparse"};
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::string s;
  for (std::size_t i = len(rng); i > 0; --i) {
    if (!s.empty()) s.push_back(' ');
    s += words[pick(rng)];
  }
  return s;
}

TEST(PropertyTest, MetricSymmetriesAndBounds) {
  std::mt19937_64 rng(16);
  for (std::size_t i = 0; i < kCases; ++i) {
    const auto a = random_sentence(rng);
    const auto b = random_sentence(rng);
    const auto ab = metrics::rouge1(a, b);
    const auto ba = metrics::rouge1(b, a);
    ASSERT_NEAR(ab.precision, ba.recall, 1e-12) << a << " | " << b;
    ASSERT_NEAR(ab.f1, ba.f1, 1e-12);
    const auto l = metrics::rougeL(a, b);
    ASSERT_LE(l.f1, ab.f1 + 1e-12) << a << " | " << b;
    const double bl = metrics::bleu2(a, b);
    ASSERT_GT(bl, 0.0);
    ASSERT_LE(bl, 1.0 + 1e-12);
    ASSERT_NEAR(metrics::rouge1(a, a).f1, 1.0, 1e-12);
  }
}

TEST(PropertyTest, RankScoresAreDistributions) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> n_sent(1, 6);
  for (std::size_t i = 0; i < kCases; ++i) {
    std::vector<std::string> s(n_sent(rng));
    for (auto& x : s) x = random_sentence(rng);
    for (const auto& p : {metrics::lexrank_scores(s), metrics::textrank_scores(s)}) {
      ASSERT_EQ(p.size(), s.size());
      ASSERT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-6);
      for (double v : p) ASSERT_GT(v, 0.0);
    }
  }
}

}  // namespace
