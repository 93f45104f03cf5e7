#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fixtures;

TEST(Coxeter, GroupOrders) {
  EXPECT_EQ(group("A2")->order(), 6u);
  EXPECT_EQ(group("I2(7)")->order(), 14u);
  EXPECT_EQ(group("B3")->order(), 48u);
  EXPECT_EQ(group("A4")->order(), 120u);
  EXPECT_EQ(group("H3")->order(), 120u);
}

TEST(Coxeter, MatrixValidation) {
  EXPECT_THROW(ks::CoxeterSpec::parse_matrix_text("2\n1 3\n2 1\n"), ks::Error);
  EXPECT_THROW(ks::CoxeterSpec::parse_matrix_text("2\n1 1\n1 1\n"), ks::Error);
  EXPECT_THROW(ks::CoxeterSpec::parse_matrix_text("2\n1 3\n3 1\n4\n"), ks::Error);
  const auto spec = ks::CoxeterSpec::parse_matrix_text("2\n1 3\n3 1\n");
  EXPECT_EQ(ks::build_group(spec)->order(), 6u);
  EXPECT_EQ(spec.content_hash(), ks::CoxeterSpec::named("A2").content_hash());
}

TEST(Coxeter, InfiniteGroupRejected) {
  try {
    ks::build_group(ks::CoxeterSpec::parse_matrix_text("3\n1 3 3\n3 1 3\n3 3 1\n"));
    FAIL();
  } catch (const ks::Error& e) {
    EXPECT_EQ(e.kind(), ks::ErrorKind::InfiniteOrTooLarge);
  }
  EXPECT_THROW(ks::build_group(ks::CoxeterSpec::named("A4"), 100), ks::Error);
}

TEST(Coxeter, Multiply) {
  const auto& g = *group("A2");
  EXPECT_EQ(ks::multiply(ge(g, "s1"), ge(g, "s1")), g.identity());
  const auto s1s2 = ks::multiply(ge(g, "s1"), ge(g, "s2"));
  EXPECT_EQ(g.word_string(s1s2.index()), "s1s2");
  EXPECT_EQ(ks::length(s1s2), 2);
  const auto w0 = ks::multiply(s1s2, ge(g, "s1"));
  EXPECT_EQ(w0.index(), g.order() - 1);
  EXPECT_EQ(ks::length(w0), 3);
}

TEST(Coxeter, MixedGroupsRejected) {
  const auto& a = *group("A2");
  const auto& b = *group("B2");
  EXPECT_THROW(ks::multiply(ge(a, "s1"), ge(b, "s1")), ks::Error);
}

TEST(Coxeter, Descents) {
  const auto& g = *group("A2");
  EXPECT_TRUE(ks::descents(g.identity(), ks::Side::Left).empty());
  EXPECT_EQ(ks::descents(ge(g, "s1s2s1"), ks::Side::Right), g.all_generators());
  EXPECT_EQ(ks::descents(ge(g, "s2s1"), ks::Side::Left), gens({2}));
  EXPECT_EQ(ks::descents(ge(g, "s2s1"), ks::Side::Right), gens({1}));
}

TEST(Coxeter, Bruhat) {
  const auto& g = *group("A2");
  for (std::uint32_t w = 0; w < g.order(); ++w) EXPECT_TRUE(g.bruhat_leq(0, w));
  EXPECT_FALSE(ks::bruhat_leq(ge(g, "s1"), ge(g, "s2")));
  EXPECT_TRUE(ks::bruhat_leq(ge(g, "s1"), ge(g, "s2s1")));
}

TEST(Coxeter, WeakOrder) {
  const auto& g = *group("A2");
  for (std::uint32_t w = 0; w < g.order(); ++w) EXPECT_TRUE(g.weak_left_leq(0, w));
  EXPECT_TRUE(ks::weak_left_leq(ge(g, "s1"), ge(g, "s2s1")));
  EXPECT_FALSE(ks::weak_left_leq(ge(g, "s2"), ge(g, "s2s1")));
}

TEST(Coxeter, WeakOrderRefinesBruhat) {
  const auto& g = *group("B3");
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = 0; y < g.order(); ++y)
      if (g.weak_left_leq(x, y)) EXPECT_TRUE(g.bruhat_leq(x, y));
}

TEST(Coxeter, LongestElement) {
  const auto& g = *group("A2");
  EXPECT_EQ(ks::longest_element(g, {}), g.identity());
  EXPECT_EQ(ks::longest_element(g, gens({1})), ge(g, "s1"));
  const auto w0 = ks::longest_element(g, g.all_generators());
  EXPECT_EQ(g.word_string(w0.index()), "s1s2s1");
  EXPECT_EQ(ks::length(w0), 3);
}

TEST(Coxeter, LengthAndInverseLaws) {
  for (const char* tag : {"B3", "H3", "I2(5)"}) {
    const auto& g = *group(tag);
    for (std::uint32_t w = 0; w < g.order(); ++w) {
      EXPECT_EQ(g.length(g.inverse(w)), g.length(w));
      EXPECT_EQ(g.multiply(w, g.inverse(w)), 0u);
      EXPECT_EQ(static_cast<int>(g.word(w).size()), g.length(w));
      EXPECT_EQ(g.from_word(g.word(w)), w);
      for (ks::Generator s = 0; s < g.rank(); ++s)
        EXPECT_EQ(std::abs(g.length(g.left_mul(s, w)) - g.length(w)), 1);
    }
  }
}
