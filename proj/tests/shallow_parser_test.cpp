#include "titlegen/shallow_parser.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace {

using ::testing::ElementsAre;
using namespace titlegen;

std::string skeleton(const std::string& sentence) {
  return extract_pattern(ShallowParser().parse(sentence), penn_pos_tags()).canonical;
}

TEST(ShallowPosTagTest, LexiconAndSuffixes) {
  EXPECT_EQ(shallow_pos_tag("the"), "DT");
  EXPECT_EQ(shallow_pos_tag("In"), "IN");
  EXPECT_EQ(shallow_pos_tag("and"), "CC");
  EXPECT_EQ(shallow_pos_tag("environments"), "NNS");
  EXPECT_EQ(shallow_pos_tag("localization"), "NN");
  EXPECT_EQ(shallow_pos_tag(":"), ":");
  EXPECT_EQ(shallow_pos_tag("non-static"), "JJ");
}

TEST(ShallowTokensTest, PeelsOuterPunctuation) {
  EXPECT_THAT(shallow_tokens("SATzilla: (fast) non-static."),
              ElementsAre("SATzilla", ":", "(", "fast", ")", "non-static", "."));
}

TEST(ShallowParserTest, NounPhraseWithPrepositionalPhrase) {
  EXPECT_EQ(skeleton("Mobile Robot Mapping and Localization in Non-Static Environments"),
            "(NP (NP (NP) (NP)) (PP (NP)))");
  EXPECT_EQ(skeleton("Random Forests"), "(NP)");
}

TEST(ShallowParserTest, ClauseTitles) {
  EXPECT_EQ(skeleton("Attention Is All You Need").substr(0, 2), "(S");
}

TEST(ShallowParserTest, EveryTitleParsesAndRoundTrips) {
  const ShallowParser parser;
  for (const auto& title : titlegen::testing::all_titles()) {
    const auto tree = parser.parse(title);
    EXPECT_EQ(tree.label, "ROOT") << title;
    // The printed form must be readable by the bracketed reader.
    EXPECT_EQ(to_bracketed(parse_bracketed(to_bracketed(tree))), to_bracketed(tree)) << title;
  }
}

TEST(ShallowParserTest, Deterministic) {
  const ShallowParser parser;
  const auto a = parser.parse_each({"deep learning for robots", "robots deep for learning"});
  const auto b = parser.parse_each({"deep learning for robots", "robots deep for learning"});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(to_bracketed(*a[0]), to_bracketed(*b[0]));
  EXPECT_EQ(to_bracketed(*a[1]), to_bracketed(*b[1]));
}

TEST(ShallowParserTest, WordOrderChangesSkeletons) {
  // Not every reordering of a title keeps its skeleton; otherwise the
  // grammar gate would reject nothing.
  EXPECT_NE(skeleton("mobile robot mapping and localization in non-static environments"),
            skeleton("in mobile robot non-static environments mapping and localization"));
}

}  // namespace
