#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ucf/core.hpp"

using namespace ucf;

namespace {
Family small_counterexample() { return Family(3, {{1, 2, 3}, {1, 2}, {1}, {2}, {}}); }
}  // namespace

TEST(Rational, ReducesAndNormalizesSign) {
  EXPECT_EQ(Rational(45, 9).str(), "5/1");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(0, 5).str(), "0/1");
  EXPECT_EQ(Rational::parse("14/10"), Rational(7, 5));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
}

TEST(Rational, ArithmeticAndOrder) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(7, 5), Rational(3, 2));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
}

TEST(Rational, Errors) {
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_THROW(Rational::parse("1/x"), Error);
  const Rational big(std::int64_t{1} << 62);
  try {
    (void)(big * big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
}

TEST(SetWord, Basics) {
  const SetWord s = SetWord::of({1, 3});
  EXPECT_EQ(s.bits(), 0b101u);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_TRUE(s.proper_subset_of(SetWord::prefix(3)));
  EXPECT_EQ(SetWord::full(GroundSize(64)).size(), 64);
  EXPECT_EQ(s.str(), "{1,3}");
  EXPECT_EQ(s.max_element(), 3);
  EXPECT_THROW(SetWord::of({0}), Error);
  EXPECT_THROW(SetWord::of({65}), Error);
  EXPECT_THROW(GroundSize(0), Error);
}

TEST(Family, SortsAndRejectsDuplicates) {
  const Family f(3, {{1, 2}, {}, {3}});
  EXPECT_EQ(f[0], SetWord());
  EXPECT_TRUE(f.contains(SetWord::of({3})));
  EXPECT_EQ(f.index_of(SetWord::of({1, 2})), 1);
  try {
    Family(3, {{1}, {1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateMember);
  }
  EXPECT_THROW(Family(2, {{3}}), Error);
}

TEST(Core, CounterexampleFamilyValues) {
  const Family f = small_counterexample();
  EXPECT_TRUE(is_union_closed(f));
  EXPECT_TRUE(is_separating(f));
  EXPECT_EQ(base_set(f), SetWord::prefix(3));
  EXPECT_EQ(avg_size(f), Rational(7, 5));
  EXPECT_EQ(frequencies(f), (std::vector<int>{3, 3, 1}));
  const auto w = frankl_witness(f);
  EXPECT_EQ(w.element, 1);
  EXPECT_EQ(w.count, 3);
  EXPECT_TRUE(w.ok);
}

TEST(Core, FullSetOnly) {
  const Family f(4, {{1, 2, 3, 4}});
  EXPECT_TRUE(is_union_closed(f));
  EXPECT_FALSE(is_separating(f));
  EXPECT_EQ(avg_size(f), Rational(4));
}

TEST(Core, UnionClosedNeedsNonemptyMember) {
  EXPECT_FALSE(is_union_closed(Family(2, {{}})));
  EXPECT_FALSE(is_union_closed(Family(2, {{1}, {2}})));
  EXPECT_TRUE(is_union_closed(union_closure(Family(2, {{1}, {2}}))));
}

TEST(Core, Separating) {
  EXPECT_TRUE(is_separating(Family(2, {{1}, {1, 2}})));
  EXPECT_FALSE(is_separating(Family(3, {{1, 2}, {1, 2, 3}})));
  EXPECT_TRUE(is_separating(Family(1, {{1}})));
}

TEST(Core, SlicesAndIrr) {
  const Family f = small_counterexample();
  EXPECT_EQ(slice(f, SizeCmp::lt, Rational(3, 2)).size(), 3u);
  EXPECT_EQ(slice(f, SizeCmp::ge, Rational(2)).size(), 2u);
  EXPECT_EQ(slice_subset(f, SubsetKind::proper, SetWord::of({1, 2})).size(), 3u);
  EXPECT_EQ(slice_subset(f, SubsetKind::improper, SetWord::of({1, 2})).size(), 4u);
  const Family g(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(irr(SetWord::of({1, 2}), g), SetWord::of({1}));
  EXPECT_TRUE(is_irredundant(g));
  EXPECT_FALSE(is_irredundant(Family(3, {{1}, {1, 2}})));
  EXPECT_THROW(irr(SetWord::of({3}), g), Error);
  const auto all = irr_all(g.members());
  EXPECT_EQ(all[0], SetWord::of({1}));
  EXPECT_EQ(all[1], SetWord::of({3}));
}

TEST(Core, EmptyFamilyErrors) {
  const Family e(GroundSize(3), std::vector<SetWord>{});
  EXPECT_THROW(base_set(e), Error);
  EXPECT_THROW(avg_size(e), Error);
  EXPECT_THROW(frankl_witness(e), Error);
}

TEST(CoreProperty, RandomFamiliesMatchDefinitions) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 7;
    const Family f = oracle::random_uc(rng, n, 1 + trial % 6);
    ASSERT_TRUE(is_union_closed(f));
    EXPECT_EQ(is_separating(f), oracle::separating(f)) << f.str();
    // Removing a member that is a union of two others breaks closure.
    for (SetWord s : f) {
      const Family g = f.without(s);
      if (g.empty()) continue;
      EXPECT_EQ(is_union_closed(g), oracle::union_closed(g)) << g.str();
    }
    // Average times size equals the sum of frequencies.
    std::int64_t freq = 0;
    for (int c : frequencies(f)) freq += c;
    EXPECT_EQ(avg_size(f) * Rational(static_cast<std::int64_t>(f.size())), Rational(freq));
  }
}

TEST(CoreProperty, IrrAllMatchesIrr) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Family f = oracle::random_uc(rng, 6, 4);
    const auto all = irr_all(f.members());
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(all[i], irr(f[i], f));
  }
}

TEST(CoreProperty, WideFamiliesUseGeneralSeparationPath) {
  // More than 64 members exercises the multi-word signature path.
  std::vector<SetWord> sets;
  for (std::uint64_t b = 1; b < 128; ++b) sets.emplace_back(b);
  const Family f(GroundSize(7), sets);
  EXPECT_TRUE(is_separating(f));
  EXPECT_EQ(is_separating(f), oracle::separating(f));
  const Family g = f.filter([](SetWord s) { return s.contains(1) == s.contains(2); });
  EXPECT_FALSE(is_separating(g));
}
