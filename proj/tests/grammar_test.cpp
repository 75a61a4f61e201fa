#include "cfdissect/grammar.hpp"

#include <set>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace cfdissect {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

std::set<std::string> as_strings(const std::vector<Word>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(w.str());
  return out;
}

// Words of length <= max_len accepted by the chart, found by walking all of
// {x,y,z,p}^<=max_len and skipping subtrees below a dead chart.
void accepted_by_chart(EarleyChart& chart, std::string& w, std::size_t max_len,
                       std::set<std::string>& out) {
  if (chart.accepts()) out.insert(w);
  if (w.size() == max_len) return;
  for (char c : {'x', 'y', 'z', 'p'}) {
    w.push_back(c);
    if (chart.push(c)) accepted_by_chart(chart, w, max_len, out);
    chart.pop();
    w.pop_back();
  }
}

std::set<std::string> accepted_by_chart(const Cfg& g, std::size_t max_len) {
  EarleyChart chart(g);
  std::string w;
  std::set<std::string> out;
  accepted_by_chart(chart, w, max_len, out);
  return out;
}

TEST(CfgTest, EnwGrammarListing) {
  EXPECT_EQ(enw_grammar().to_bnf(), "S -> x P P y\nP -> S | p z p | p z z p\n");
}

TEST(CfgTest, BalancedGrammarListing) {
  EXPECT_EQ(balanced_grammar().to_bnf(),
            "S -> x S y | p Z V Z p\n"
            "V -> V Z V | p T p\n"
            "T -> y T x | eps\n"
            "Z -> z | z z\n");
}

TEST(CfgTest, RejectsMalformed) {
  EXPECT_THROW(Cfg({"S"}, "A", {{"S", "x"}}), GrammarError);
  EXPECT_THROW(Cfg({"S"}, "S", {{"S", "x Q"}}), GrammarError);
  EXPECT_THROW(Cfg({"S", "A"}, "S", {{"S", "x A"}}), GrammarError);
  EXPECT_THROW(Cfg({"S"}, "S", {{"S", "x eps"}}), GrammarError);
  EXPECT_THROW(Cfg({"x"}, "x", {{"x", "y"}}), GrammarError);
  EXPECT_THROW(Cfg({"S", "S"}, "S", {{"S", "x"}}), GrammarError);
}

TEST(CfgTest, UnreachableNonterminalMayLackProductions) {
  const Cfg g({"S", "Unused"}, "S", {{"S", "x"}});
  EXPECT_TRUE(recognize(g, "x").accepted);
}

TEST(CfgTest, NullableAndMinYield) {
  const Cfg g = balanced_grammar();
  EXPECT_TRUE(g.nullable(2));   // T
  EXPECT_FALSE(g.nullable(1));  // V
  EXPECT_EQ(g.min_yield(0), 6u);  // pzppzp
  EXPECT_EQ(g.min_yield(1), 2u);
}

TEST(RecognizeTest, EnwExamples) {
  const Cfg g = enw_grammar();
  EXPECT_TRUE(recognize(g, "xpzppzpy").accepted);
  EXPECT_TRUE(recognize(g, "xpzpxpzppzzpyy").accepted);
  EXPECT_FALSE(recognize(g, "").accepted);
  EXPECT_FALSE(recognize(g, "y").accepted);
}

TEST(RecognizeTest, BalancedExamples) {
  const Cfg g = balanced_grammar();
  EXPECT_TRUE(recognize(g, "xpzzppzzpy").accepted);
  EXPECT_TRUE(recognize(g, "xxpzppzpyxpzzppzzpyy").accepted);
  EXPECT_FALSE(recognize(g, "xpzpxpzppzzpyy").accepted);
  EXPECT_FALSE(recognize(g, "pzp").accepted);
  // S -> p Z V Z p with no outer brackets.
  EXPECT_TRUE(recognize(g, "pzppzp").accepted);
}

TEST(RecognizeTest, ReportsItems) {
  EXPECT_GT(recognize(enw_grammar(), "xpzppzpy").item_count, 8u);
}

TEST(RecognizeTest, LeftRecursionAndEpsilon) {
  const Cfg g({"A"}, "A", {{"A", "A x"}, {"A", "eps"}});
  for (std::size_t n = 0; n < 12; ++n) EXPECT_TRUE(recognize(g, std::string(n, 'x')).accepted);
  EXPECT_FALSE(recognize(g, "xxy").accepted);
}

TEST(RecognizeTest, NullableCycle) {
  // Dyck words on x/y, written with a nullable self-embedding.
  const Cfg g({"S"}, "S", {{"S", "S S"}, {"S", "x S y"}, {"S", "eps"}});
  EXPECT_TRUE(recognize(g, "").accepted);
  EXPECT_TRUE(recognize(g, "xyxxyy").accepted);
  EXPECT_FALSE(recognize(g, "xyy").accepted);
  EXPECT_EQ(as_strings(enumerate_derivations(g, 8)), accepted_by_chart(g, 8));
}

TEST(EnumerateTest, ShortestEnwWords) {
  EXPECT_THAT(as_strings(enumerate_derivations(enw_grammar(), 10)),
              ::testing::UnorderedElementsAre("xpzppzpy", "xpzzppzpy", "xpzppzzpy", "xpzzppzzpy"));
  EXPECT_THAT(enumerate_derivations(enw_grammar(), 7), IsEmpty());
  EXPECT_EQ(enumerate_derivations(enw_grammar(), 8).size(), 1u);
}

TEST(EnumerateTest, FourLeafEnwWords) {
  // Four leaves occupy at most 3 * 2 bracket letters plus 4 * 4 leaf letters.
  std::size_t four = 0;
  for (const auto& w : enumerate_derivations(enw_grammar(), 22)) {
    if (occur(w, "pzp") + occur(w, "pzzp") == 4) ++four;
  }
  EXPECT_EQ(four, 80u);
}

TEST(EnumerateTest, OrderedAndDistinct) {
  const auto words = enumerate_derivations(balanced_grammar(), 14);
  EXPECT_EQ(as_strings(words).size(), words.size());
  for (std::size_t i = 1; i < words.size(); ++i) EXPECT_LE(words[i - 1].size(), words[i].size());
}

TEST(EnumerateTest, ChartAgreesWithEnumerationUpTo12) {
  for (const Cfg& g : {enw_grammar(), balanced_grammar()}) {
    EXPECT_EQ(as_strings(enumerate_derivations(g, 12)), accepted_by_chart(g, 12)) << g.to_bnf();
  }
}

}  // namespace
}  // namespace cfdissect
