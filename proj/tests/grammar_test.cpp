#include "titlegen/grammar.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "titlegen/error.hpp"

namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using namespace titlegen;
using titlegen::testing::TempDir;
using titlegen::testing::write_file;

std::string pattern_of(const std::string& bracketed) {
  return extract_pattern(parse_bracketed(bracketed), penn_pos_tags()).canonical;
}

const char* kSmall = "(ROOT (NP (JJ mobile) (NN robot)))";
const char* kLarge =
    "(ROOT (NP (NP (NN mapping)) (PP (IN in) (NP (JJ non-static) (NNS environments)))))";

TEST(ParseBracketedTest, Preterminal) {
  const auto t = parse_bracketed("(NP (NN mapping))");
  EXPECT_EQ(t.label, "NP");
  ASSERT_EQ(t.children.size(), 1u);
  EXPECT_TRUE(t.children[0].is_preterminal());
  EXPECT_EQ(t.children[0].label, "NN");
  EXPECT_EQ(t.children[0].children[0].leaf_word, "mapping");
}

TEST(ParseBracketedTest, NestedAndWhitespaceInsensitive) {
  const auto t = parse_bracketed("(ROOT\n (NP (NP (NN a))\t(PP (IN of) (NP (NN b)))))");
  EXPECT_EQ(t.label, "ROOT");
  EXPECT_EQ(t.children[0].children[1].label, "PP");
  EXPECT_EQ(to_bracketed(t), "(ROOT (NP (NP (NN a)) (PP (IN of) (NP (NN b)))))");
}

TEST(ParseBracketedTest, UnlabeledOuterNodeIsRoot) {
  EXPECT_EQ(parse_bracketed("( (NP (NN x)))").label, "ROOT");
}

TEST(ParseBracketedTest, ErrorsCarryOffsets) {
  try {
    parse_bracketed("(NP (NN");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
  EXPECT_THROW(parse_bracketed("(NP ())"), ParseError);
  EXPECT_THROW(parse_bracketed("(NP (NN x)))"), ParseError);
  EXPECT_THROW(parse_bracketed(""), ParseError);
  EXPECT_THROW(parse_bracketed("NP"), ParseError);
}

TEST(ExtractPatternTest, Examples) {
  EXPECT_EQ(pattern_of(kSmall), "(NP)");
  EXPECT_EQ(pattern_of(kLarge), "(NP (NP) (PP (NP)))");
  EXPECT_EQ(pattern_of("(ROOT (NN x))"), "(EMPTY)");
  EXPECT_EQ(pattern_of("(TOP (S (NP (NN x)) (VP (VBZ y))))"), "(S (NP) (VP))");
}

TEST(ExtractPatternTest, IgnoresWordsAndTags) {
  EXPECT_EQ(pattern_of("(NP (NP (NN a)) (PP (IN of) (NP (NN b))))"),
            pattern_of("(NP (NP (JJ zz)) (PP (TO to) (NP (NNS qq))))"));
}

TEST(ExtractPatternTest, CustomTagSet) {
  const PosTagSet tags = {"N", "P"};
  EXPECT_EQ(extract_pattern(parse_bracketed("(NP (N a) (PP (P b) (NP (N c))))"), tags).canonical,
            "(NP (PP (NP)))");
}

TEST(BuildBankTest, Examples) {
  const auto& tags = penn_pos_tags();
  const auto same = build_bank({parse_bracketed(kSmall), parse_bracketed("(ROOT (NP (DT a) (NN b)))")}, tags);
  EXPECT_EQ(same.size(), 1u);
  EXPECT_EQ(same.source_count(), 2u);
  EXPECT_EQ(build_bank({}, tags).size(), 0u);
  const auto both = build_bank({parse_bracketed(kSmall), parse_bracketed(kLarge)}, tags);
  EXPECT_EQ(both.patterns(), (std::set<std::string>{"(NP)", "(NP (NP) (PP (NP)))"}));
}

TEST(CheckTest, Membership) {
  const auto& tags = penn_pos_tags();
  const auto bank = build_bank({parse_bracketed(kSmall), parse_bracketed(kLarge)}, tags);
  EXPECT_TRUE(check(bank, parse_bracketed("(NP (NP (NN x)) (PP (IN y) (NP (NN z))))"), tags));
  EXPECT_FALSE(check(bank, parse_bracketed("(S (NP (NN x)) (VP (VBZ y)))"), tags));
  const auto t = parse_bracketed("(S (NP (NN x)) (VP (VBZ y)))");
  EXPECT_TRUE(check(build_bank({t}, tags), t, tags));
}

TEST(PatternBankTest, SaveLoadRoundTrip) {
  TempDir dir;
  const auto bank = build_bank({parse_bracketed(kSmall), parse_bracketed(kLarge)}, penn_pos_tags());
  bank.save(dir / "bank.txt");
  EXPECT_EQ(titlegen::testing::read_file(dir / "bank.txt"),
            "source_count=2\n(NP (NP) (PP (NP)))\n(NP)\n");
  const auto back = PatternBank::load(dir / "bank.txt");
  EXPECT_EQ(back.patterns(), bank.patterns());
  EXPECT_EQ(back.source_count(), 2u);
  write_file(dir / "bad.txt", "(NP)\n");
  EXPECT_THROW(PatternBank::load(dir / "bad.txt"), ValidationError);
  EXPECT_THROW(PatternBank::load(dir / "none.txt"), IoError);
}

TEST(TreeFileParserTest, OneTreePerSentence) {
  TempDir dir;
  write_file(dir / "trees.txt", "(NP (NN a))\n(NP (NN b))\n(NP (NN c))\n");
  TreeFileParser parser(dir / "trees.txt");
  const auto trees = request_parses({"a", "b", "c"}, parser);
  ASSERT_EQ(trees.size(), 3u);
  EXPECT_EQ(trees[2].children[0].children[0].leaf_word, "c");
}

TEST(TreeFileParserTest, CountMismatch) {
  TempDir dir;
  write_file(dir / "trees.txt", "(NP (NN a))\n(NP (NN b))\n");
  TreeFileParser parser(dir / "trees.txt");
  try {
    parser.parse_each({"a", "b", "c"});
    FAIL();
  } catch (const ExternalError& e) {
    EXPECT_THAT(e.what(), HasSubstr("expected 3 trees, got 2"));
  }
}

TEST(TreeFileParserTest, UnreadableLineIsPerSentence) {
  TempDir dir;
  write_file(dir / "trees.txt", "(NP (NN a))\n(NP (NN\n");
  TreeFileParser parser(dir / "trees.txt");
  const auto out = parser.parse_each({"a", "b"});
  EXPECT_TRUE(out[0].has_value());
  EXPECT_FALSE(out[1].has_value());
  EXPECT_THROW(request_parses({"a", "b"}, parser), ExternalError);
}

TEST(CommandParserTest, ParsesChildOutput) {
  CommandParser parser(R"sh(while read l; do echo "(NP (NN x))"; done)sh");
  const auto trees = request_parses({"one", "two", "three"}, parser);
  ASSERT_EQ(trees.size(), 3u);
  EXPECT_EQ(extract_pattern(trees[1], penn_pos_tags()).canonical, "(NP)");
}

TEST(CommandParserTest, Failures) {
  EXPECT_THROW(CommandParser("cat > /dev/null; exit 4").parse_each({"a"}), ExternalError);
  EXPECT_THROW(CommandParser("head -n 1 | sed 's/.*/(NP (NN x))/'").parse_each({"a", "b"}),
               Error);
}

TEST(LoadTreeFileTest, SkipsAndCounts) {
  TempDir dir;
  write_file(dir / "t.txt", "(NP (NN a))\n\n(NP (\n(S (NP (NN b)) (VP (VB c)))\n");
  std::size_t skipped = 0;
  const auto trees = load_tree_file(dir / "t.txt", &skipped);
  EXPECT_EQ(trees.size(), 2u);
  EXPECT_EQ(skipped, 1u);
  EXPECT_THROW(load_tree_file(dir / "t.txt"), ValidationError);
}

}  // namespace
