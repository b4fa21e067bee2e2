#include "prodseq/productset.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace prodseq {
namespace {

std::vector<Natural> values_of(const std::vector<SequenceMember<Natural>>& members) {
  std::vector<Natural> out;
  for (const auto& m : members) out.push_back(m.value);
  return out;
}

TEST(BaseSet, SortsAndValidates) {
  const BaseSet<Natural> b{5, 1, 3};
  EXPECT_EQ(b.elements(), (std::vector<Natural>{1, 3, 5}));
  EXPECT_TRUE(b.contains(3));
  EXPECT_FALSE(b.contains(2));
  EXPECT_THROW((BaseSet<Natural>{1, 1}), DomainError);
  EXPECT_THROW((BaseSet<Natural>{0, 2}), DomainError);
  EXPECT_THROW((BaseSet<Rational>{Rational(-1, 2)}), DomainError);
}

TEST(ProductSet, TwoElements) {
  const auto ps = build_product_set(BaseSet<Natural>{2, 3});
  ASSERT_EQ(ps.size(), 3u);
  using P = FactorPair<Natural>;
  EXPECT_EQ(*ps.pairs_of(4), (std::vector<P>{P{2, 2}}));
  EXPECT_EQ(*ps.pairs_of(6), (std::vector<P>{P{2, 3}}));
  EXPECT_EQ(*ps.pairs_of(9), (std::vector<P>{P{3, 3}}));
  EXPECT_EQ(ps.pairs_of(5), nullptr);
}

TEST(ProductSet, FibonacciBase) {
  const auto ps = build_product_set(BaseSet<Natural>{1, 2, 3, 5, 8});
  EXPECT_EQ(ps.size(), 15u);
  for (int v : {1, 2, 3, 5, 8, 15, 40}) EXPECT_NE(ps.pairs_of(v), nullptr) << v;
}

TEST(ProductSet, SingletonAndEmpty) {
  const auto ps = build_product_set(BaseSet<Natural>{1});
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(*ps.pairs_of(1), (std::vector<FactorPair<Natural>>{{1, 1}}));
  EXPECT_THROW(build_product_set(BaseSet<Natural>(std::vector<Natural>{})), DomainError);
}

TEST(ProductSet, ProvenanceIsCompleteAndSound) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::vector<Natural> el;
    for (int v = 1; v <= 60; ++v) {
      if (rng() % 6 == 0) el.emplace_back(v);
    }
    if (el.empty()) continue;
    const BaseSet<Natural> base(el);
    const auto ps = build_product_set(base);
    std::size_t pair_total = 0;
    for (const auto& [value, pairs] : ps.products()) {
      for (const auto& p : pairs) {
        EXPECT_EQ(p.low * p.high, value);
        EXPECT_LE(p.low, p.high);
        EXPECT_TRUE(base.contains(p.low) && base.contains(p.high));
      }
      pair_total += pairs.size();
    }
    EXPECT_EQ(pair_total, el.size() * (el.size() + 1) / 2);
    // Reordering the input does not change anything.
    std::shuffle(el.begin(), el.end(), rng);
    EXPECT_EQ(build_product_set(BaseSet<Natural>(el)).products(), ps.products());
  }
}

TEST(SequenceMembers, Fibonacci) {
  const auto members = sequence_members(build_product_set(BaseSet<Natural>{1, 2, 3, 5, 8}), fibonacci_membership());
  EXPECT_EQ(values_of(members), (std::vector<Natural>{1, 2, 3, 5, 8}));
  EXPECT_EQ(members[4].index, 6u);
  EXPECT_TRUE(sequence_members(build_product_set(BaseSet<Natural>{2, 3}), fibonacci_membership()).empty());
}

TEST(SequenceMembers, LucasNumbers) {
  const BaseSet<Natural> base{1, 3, 4, 7};
  auto table = std::make_shared<const TermIndex>(SequenceId::lucas_numbers(), max_product(base));
  const auto members = sequence_members(build_product_set(base), term_membership(table));
  EXPECT_EQ(values_of(members), (std::vector<Natural>{1, 3, 4, 7}));
  EXPECT_EQ(max_product(base), 49);
}

TEST(SequenceMembers, RationalBase) {
  // 1/2 * 4 = 2 and 3/2 * 2 = 3 are integers; 1/2 * 1/2 is not.
  const BaseSet<Rational> base{Rational(1, 2), Rational(3, 2), Rational(2), Rational(4)};
  const auto ps = build_product_set(base);
  const auto members = sequence_members(ps, fibonacci_membership());
  std::vector<Rational> values;
  for (const auto& m : members) values.push_back(m.value);
  EXPECT_EQ(values, (std::vector<Rational>{Rational(1), Rational(2), Rational(3), Rational(8)}));
  EXPECT_EQ(ps.pairs_of(Rational(3))->front(), (FactorPair<Rational>{Rational(3, 2), Rational(2)}));
  EXPECT_EQ(max_product(base), 16);
  EXPECT_EQ(max_product(BaseSet<Rational>{Rational(3, 2)}), 3);  // ceil(9/4)
}

TEST(AsPositiveInteger, Rules) {
  EXPECT_EQ(as_positive_integer(Rational(6, 3)), Natural(2));
  EXPECT_EQ(as_positive_integer(Rational(1, 3)), std::nullopt);
  EXPECT_EQ(as_positive_integer(Natural(0)), std::nullopt);
}

}  // namespace
}  // namespace prodseq
