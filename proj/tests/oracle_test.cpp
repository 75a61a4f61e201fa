#include "cfdissect/oracle.hpp"

#include <set>

#include "cfdissect/grammar.hpp"
#include "cfdissect/omega.hpp"
#include "cfdissect/recognizers.hpp"
#include "gtest/gtest.h"

namespace cfdissect {
namespace {

TEST(OracleDiffTest, VacuousRun) {
  const auto r = oracle_diff(0, 0, 0);
  EXPECT_EQ(r.words, 1u);  // the empty word
  EXPECT_EQ(r.mismatches, 0u);
}

TEST(OracleDiffTest, ExhaustiveUpToEight) {
  const auto r = oracle_diff(8, 0, 1);
  EXPECT_EQ(r.words, 87381u);  // (4^9 - 1) / 3
  EXPECT_EQ(r.mismatches, 0u);
}

TEST(OracleDiffTest, RandomSamples) {
  const auto r = oracle_diff(0, 20000, 42);
  EXPECT_EQ(r.mismatches, 0u);
  for (const auto& m : r.examples) ADD_FAILURE() << m.word;
}

TEST(RandomWordsTest, SeededStreamsRepeat) {
  RandomWords a(123);
  RandomWords b(123);
  RandomWords c(124);
  bool differs = false;
  for (int i = 0; i < 500; ++i) {
    const auto wa = a.next();
    EXPECT_EQ(wa, b.next());
    differs |= wa != c.next();
    EXPECT_LE(wa.size(), kMaxRandomLength);
  }
  EXPECT_TRUE(differs);
}

TEST(RandomWordsTest, StreamContainsMembersOfEachLanguage) {
  RandomWords gen(5);
  std::size_t enw = 0;
  std::size_t balanced = 0;
  std::size_t omega = 0;
  for (int i = 0; i < 4000; ++i) {
    const auto w = gen.next();
    enw += is_enw(w);
    balanced += is_balanced(w);
    omega += is_omega(w);
  }
  EXPECT_GT(enw, 200u);
  EXPECT_GT(balanced, 200u);
  EXPECT_GT(omega, 200u);
}

TEST(RandomWordsTest, ConstructionsAreMembers) {
  RandomWords gen(9);
  for (int i = 0; i < 300; ++i) {
    EXPECT_TRUE(is_enw(gen.enw(2 + i % 20)));
    EXPECT_TRUE(is_balanced(gen.balanced()));
    EXPECT_TRUE(is_omega(gen.omega(1 + i % 5)));
  }
}

TEST(RandomWordsTest, LongMembersAgreeWithChart) {
  // Long accepted words exercise the chart far more than random rejects.
  RandomWords gen(77);
  const Cfg enw = enw_grammar();
  const Cfg bal = balanced_grammar();
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.enw(20 + i % 20);
    EXPECT_TRUE(recognize(enw, a).accepted) << a;
    const auto b = gen.balanced();
    EXPECT_TRUE(recognize(bal, b).accepted) << b;
    const auto m = gen.mutate(gen.omega(4));
    EXPECT_EQ(recognize(enw, m).accepted, is_enw(m)) << m;
    EXPECT_EQ(recognize(bal, m).accepted, is_balanced(m)) << m;
  }
}

TEST(OracleDiffTest, RejectsLargeExhaustiveBound) {
  EXPECT_THROW(oracle_diff(13, 0, 0), std::invalid_argument);
}

}  // namespace
}  // namespace cfdissect
