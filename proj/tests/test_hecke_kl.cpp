#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fixtures;

namespace {

const ks::CoxeterGroup& A2() { return *group("A2"); }

ks::LaurentInt d() { return q() - q(-1); }

}  // namespace

TEST(Hecke, GeneratorProducts) {
  const auto& g = A2();
  EXPECT_EQ(ks::t_mul_generator(0, T(g, "s2")), T(g, "s1s2"));
  EXPECT_EQ(ks::t_mul_generator(0, T(g, "s1")), T(g, "e") + T(g, "s1", d()));
  EXPECT_EQ(ks::t_mul_generator(0, T(g, "s1s2")), T(g, "s2") + T(g, "s1s2", d()));
  EXPECT_EQ(ks::t_mul_generator(1, T(g, "s1"), ks::Side::Right), T(g, "s1s2"));
}

TEST(Hecke, Products) {
  const auto& g = A2();
  const ks::HeckeVector h = T(g, "s1s2", q(2)) + T(g, "s2", 3);
  EXPECT_EQ(ks::t_mul(T(g, "e"), h), h);
  EXPECT_EQ(ks::t_mul(T(g, "s1s2"), T(g, "s2")), T(g, "s1") + T(g, "s1s2", d()));
}

TEST(Hecke, InverseGenerator) {
  const auto& g = *group("B3");
  for (std::uint32_t w = 0; w < g.order(); ++w)
    for (ks::Generator s = 0; s < g.rank(); ++s) {
      const ks::HeckeVector tw = ks::HeckeVector::basis(&g, w);
      EXPECT_EQ(ks::t_inverse_generator(s, ks::t_mul_generator(s, tw)), tw);
    }
}

TEST(Hecke, Bar) {
  const auto& g = A2();
  EXPECT_EQ(ks::bar(T(g, "e", q())), T(g, "e", q(-1)));
  EXPECT_EQ(ks::bar(T(g, "s1")), T(g, "s1") + T(g, "e", -d()));
  const ks::HeckeVector expect = T(g, "s1s2") + T(g, "s1", -d()) + T(g, "s2", -d()) + T(g, "e", d() * d());
  EXPECT_EQ(ks::bar(T(g, "s1s2")), expect);
}

TEST(Hecke, Star) {
  const auto& g = A2();
  EXPECT_EQ(ks::star(T(g, "s1")), T(g, "s1"));
  EXPECT_EQ(ks::star(T(g, "s1s2")), T(g, "s2s1"));
  EXPECT_EQ(ks::star(T(g, "s1s2", q()) + T(g, "e")), T(g, "s2s1", q()) + T(g, "e"));
}

TEST(Hecke, BarIsMultiplicativeInvolution) {
  const auto& g = *group("B2");
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = 0; y < g.order(); ++y) {
      const auto tx = ks::HeckeVector::basis(&g, x, q() + 2);
      const auto ty = ks::HeckeVector::basis(&g, y, q(-1));
      EXPECT_EQ(ks::bar(ks::t_mul(tx, ty)), ks::t_mul(ks::bar(tx), ks::bar(ty)));
      EXPECT_EQ(ks::star(ks::t_mul(tx, ty)), ks::t_mul(ks::star(ty), ks::star(tx)));
    }
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const auto tx = ks::HeckeVector::basis(&g, x, q(3) - 1);
    EXPECT_EQ(ks::bar(ks::bar(tx)), tx);
  }
}

TEST(KL, A2Basis) {
  const auto& g = A2();
  const auto& kl = fixtures::kl("A2");
  EXPECT_EQ(kl.c(0), T(g, "e"));
  EXPECT_EQ(kl.c(el(g, "s1")), T(g, "s1") + T(g, "e", -q()));
  const ks::HeckeVector w0 = T(g, "s1s2s1") + T(g, "s1s2", -q()) + T(g, "s2s1", -q()) + T(g, "s1", q(2)) +
                             T(g, "s2", q(2)) + T(g, "e", -q(3));
  EXPECT_EQ(kl.c(g.order() - 1), w0);
}

TEST(KL, Mu) {
  const auto& g = A2();
  const auto& kl = fixtures::kl("A2");
  EXPECT_EQ(ks::mu(kl, ge(g, "e"), ge(g, "s1")), 1);
  EXPECT_EQ(ks::mu(kl, ge(g, "s1"), ge(g, "s1s2s1")), 0);
  EXPECT_EQ(ks::mu(kl, ge(g, "s1"), ge(g, "s2s1")), 1);
  EXPECT_EQ(ks::mu(kl, ge(g, "s1"), ge(g, "s2")), 0);
}

TEST(KL, ConventionConversion) {
  EXPECT_EQ(ks::convert_kl_convention(1, 1), -q());
  EXPECT_EQ(ks::convert_kl_convention(1, 2), q(2));
  EXPECT_EQ(ks::convert_kl_convention(1 + q(), 3), -q(3) - q());
  const auto& g = *group("A3");
  EXPECT_EQ(fixtures::kl("A3").p(el(g, "s2"), el(g, "s2s1s3s2")), -q(3) - q());
}

TEST(KL, GeneratorActionInCBasis) {
  const auto& g = A2();
  const auto& kl = fixtures::kl("A2");
  const auto s1 = el(g, "s1");
  ks::HeckeVector c(&g);
  c.add(s1, -q(-1));
  EXPECT_EQ(ks::c_mul_generator(0, kl, s1), c);
  ks::HeckeVector e(&g);
  e.add(s1, q());
  e.add(el(g, "s2s1"), 1);
  EXPECT_EQ(ks::c_mul_generator(1, kl, s1), e);
  ks::HeckeVector f(&g);
  f.add(el(g, "s2"), q());
  f.add(el(g, "s1s2"), 1);
  EXPECT_EQ(ks::c_mul_generator(0, kl, el(g, "s2")), f);
}

class KLGroups : public ::testing::TestWithParam<const char*> {};

TEST_P(KLGroups, BarInvariantAndPositive) {
  const auto& g = *group(GetParam());
  const auto& kl = fixtures::kl(GetParam());
  for (std::uint32_t w = 0; w < g.order(); ++w) {
    EXPECT_EQ(ks::bar(kl.c(w)), kl.c(w)) << g.word_string(w);
    EXPECT_EQ(kl.p(w, w), ks::LaurentInt(1));
    for (const auto& [y, p] : kl.c(w).coords()) {
      if (y == w) continue;
      EXPECT_TRUE(g.bruhat_leq(y, w));
      EXPECT_GE(p.min_degree(), 1);
      EXPECT_EQ(-p.coeff(1), ks::BigInt(kl.mu(y, w)));
    }
  }
}

TEST_P(KLGroups, MultiplicationRule) {
  const auto& g = *group(GetParam());
  const auto& kl = fixtures::kl(GetParam());
  for (std::uint32_t w = 0; w < g.order(); ++w)
    for (ks::Generator s = 0; s < g.rank(); ++s)
      EXPECT_EQ(ks::c_to_t(kl, ks::c_mul_generator(s, kl, w)), ks::t_mul_generator(s, kl.c(w)));
}

TEST_P(KLGroups, MatchesDegreeOracle) {
  const auto& g = *group(GetParam());
  const auto& kl = fixtures::kl(GetParam());
  const auto oracle = ks::kl_basis_oracle(g);
  for (std::uint32_t w = 0; w < g.order(); ++w) EXPECT_EQ(kl.c(w), oracle[w]) << g.word_string(w);
}

INSTANTIATE_TEST_SUITE_P(Groups, KLGroups, ::testing::Values("A2", "B2", "A3", "B3", "I2(5)", "I2(7)"),
                         [](const auto& info) {
                           std::string n = info.param;
                           std::erase_if(n, [](char c) { return c == '(' || c == ')'; });
                           return n;
                         });
