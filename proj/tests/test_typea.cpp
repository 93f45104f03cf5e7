#include <gtest/gtest.h>

#include <fstream>

#include "fixtures.hpp"

using namespace fixtures;

namespace {

ks::StandardTableau tab(std::vector<std::vector<int>> rows) { return ks::StandardTableau{std::move(rows)}; }

ks::Partition part(std::vector<int> p) { return ks::Partition(std::move(p)); }

const ks::TypeAContext& ctx(int n) {
  static std::map<int, std::unique_ptr<ks::TypeAContext>> cache;
  auto& c = cache[n];
  if (!c) c = std::make_unique<ks::TypeAContext>(n);
  return *c;
}

}  // namespace

TEST(TypeA, Partitions) {
  EXPECT_EQ(ks::partitions(1).size(), 1u);
  const auto p3 = ks::partitions(3);
  ASSERT_EQ(p3.size(), 3u);
  EXPECT_EQ(p3[0], part({3}));
  EXPECT_EQ(p3[1], part({2, 1}));
  EXPECT_EQ(p3[2], part({1, 1, 1}));
  EXPECT_EQ(ks::partitions(5).size(), 7u);
  EXPECT_EQ(ks::Partition::parse("3,1,1").to_string(), "3,1,1");
  EXPECT_EQ(part({3, 1}).conjugate(), part({2, 1, 1}));
  EXPECT_THROW(ks::Partition::parse("1,2"), ks::Error);
  EXPECT_THROW(ks::Partition::parse("2,x"), ks::Error);
}

TEST(TypeA, Dominance) {
  EXPECT_TRUE(ks::dominance_leq(part({1, 1, 1}), part({2, 1})));
  EXPECT_TRUE(ks::dominance_leq(part({2, 1}), part({3})));
  EXPECT_FALSE(ks::dominance_leq(part({3}), part({2, 1})));
  EXPECT_FALSE(ks::dominance_leq(part({2, 2, 2}), part({3, 1, 1, 1})));
  EXPECT_FALSE(ks::dominance_leq(part({3, 1, 1, 1}), part({2, 2, 2})));
  EXPECT_TRUE(ks::dominance_leq(part({2, 2}), part({2, 2})));
  try {
    ks::dominance_leq(part({2}), part({2, 1}));
    FAIL();
  } catch (const ks::Error& e) {
    EXPECT_EQ(e.kind(), ks::ErrorKind::SizeMismatch);
  }
}

TEST(TypeA, StandardTableaux) {
  EXPECT_EQ(ks::standard_tableaux(part({4})).size(), 1u);
  const auto t21 = ks::standard_tableaux(part({2, 1}));
  ASSERT_EQ(t21.size(), 2u);
  EXPECT_EQ(t21[0].to_string(), "[[1,2],[3]]");
  EXPECT_EQ(t21[1].to_string(), "[[1,3],[2]]");
  EXPECT_EQ(ks::standard_tableaux(part({2, 2})).size(), 2u);
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : ks::partitions(n)) {
      const auto ts = ks::standard_tableaux(lambda);
      EXPECT_EQ(ts.size(), ks::hook_length_count(lambda));
      for (const auto& t : ts) EXPECT_TRUE(t.is_standard());
    }
}

TEST(TypeA, Descents) {
  auto d = ks::tableau_descents(tab({{1, 2}, {3}}));
  EXPECT_EQ(d.I, std::vector<int>{2});
  EXPECT_EQ(d.I0, std::vector<int>{2});
  EXPECT_TRUE(d.I1.empty());
  d = ks::tableau_descents(tab({{1, 3}, {2}}));
  EXPECT_EQ(d.I, std::vector<int>{1});
  EXPECT_EQ(d.I1, std::vector<int>{1});
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : ks::partitions(n)) {
      EXPECT_TRUE(ks::tableau_descents(ks::column_reading_tableau(lambda)).I0.empty());
      for (const auto& t : ks::standard_tableaux(lambda)) {
        const auto a = ks::tableau_descents(t);
        const auto b = ks::tableau_descents(t.conjugate());
        EXPECT_EQ(a.I.size(), a.I0.size() + a.I1.size());
        for (int i = 1; i < n; ++i) EXPECT_NE(ks::contains_value(a.I, i), ks::contains_value(b.I, i));
      }
    }
}

TEST(TypeA, CosetWord) {
  const auto& c = ctx(3);
  EXPECT_EQ(c.coset_word(ks::row_reading_tableau(part({2, 1}))), 0u);
  EXPECT_EQ(c.group().word_string(c.coset_word(tab({{1, 3}, {2}}))), "s2");
  try {
    c.coset_word(tab({{2, 1}, {3}}));
    FAIL();
  } catch (const ks::Error& e) {
    EXPECT_EQ(e.kind(), ks::ErrorKind::NotRowStandard);
  }
}

TEST(TypeA, RobinsonSchensted) {
  auto [P, Q] = ks::rs_insert(ks::Permutation{1, 2, 3});
  EXPECT_EQ(P.to_string(), "[[1,2,3]]");
  EXPECT_EQ(Q.to_string(), "[[1,2,3]]");
  std::tie(P, Q) = ks::rs_insert(ks::Permutation{3, 1, 2});
  EXPECT_EQ(P.to_string(), "[[1,2],[3]]");
  EXPECT_EQ(Q.to_string(), "[[1,3],[2]]");
  const auto& c = ctx(3);
  EXPECT_EQ(c.permutation(el(c.group(), "s2s1")), (ks::Permutation{3, 1, 2}));
  std::tie(P, Q) = ks::rs_insert(c, c.group().order() - 1);
  EXPECT_EQ(P.to_string(), "[[1],[2],[3]]");
  EXPECT_EQ(Q.to_string(), "[[1],[2],[3]]");
}

TEST(TypeA, LongestTableauPair) {
  for (int n = 2; n <= 6; ++n) {
    const auto& c = ctx(n);
    for (const auto& sh : c.shapes()) {
      const auto [P, Q] = ks::rs_insert(c, c.group().multiply(sh.w_lambda, sh.wJ));
      const auto conj = sh.lambda.conjugate();
      EXPECT_EQ(P, ks::row_reading_tableau(conj)) << sh.lambda.to_string();
      EXPECT_EQ(Q, ks::column_reading_tableau(conj)) << sh.lambda.to_string();
    }
  }
}

TEST(TypeA, EJLambda) {
  const auto& c = ctx(3);
  const auto& g = c.group();
  EXPECT_EQ(ks::ej_lambda(c, part({1, 1, 1})), std::vector<std::uint32_t>{0});
  EXPECT_EQ(ks::ej_lambda(c, part({3})), std::vector<std::uint32_t>{g.order() - 1});
  const auto e = ks::ej_lambda(c, part({2, 1}));
  EXPECT_EQ(e, (std::vector<std::uint32_t>{el(g, "s1"), el(g, "s2s1")}));
  EXPECT_EQ(e, c.shape(part({2, 1})).system->EJ());
  for (int n = 2; n <= 6; ++n)
    for (const auto& sh : ctx(n).shapes()) {
      const auto labels = ks::ej_lambda(ctx(n), sh.lambda);
      EXPECT_EQ(labels, sh.labels) << sh.lambda.to_string();
      EXPECT_EQ(labels.size(), sh.tableaux.size());
    }
}

TEST(TypeA, ClassificationByTableaux) {
  const auto& c = ctx(3);
  const auto& g = c.group();
  const auto lambda = part({2, 1});
  const auto& sys = *c.shape(lambda).system;
  auto k = ks::ej_classification_by_tableaux(c, lambda, 2);
  EXPECT_EQ(k.plus, std::vector<std::uint32_t>{el(g, "s1")});
  EXPECT_EQ(sys.ej_class(1, el(g, "s1")).cls, ks::EJClass::Plus);
  k = ks::ej_classification_by_tableaux(c, lambda, 1);
  EXPECT_EQ(k.zero_minus, std::vector<std::uint32_t>{el(g, "s1")});
  EXPECT_EQ(k.zero_plus, std::vector<std::uint32_t>{el(g, "s2s1")});
}

TEST(TypeA, ClassificationAgreesWithLabels) {
  for (int n = 2; n <= 6; ++n) {
    const auto& c = ctx(n);
    for (const auto& sh : c.shapes()) {
      const auto& m = c.specht(sh.lambda);
      for (int i = 1; i < n; ++i) {
        const auto k = ks::ej_classification_by_tableaux(c, sh.lambda, i);
        for (auto x : k.minus) EXPECT_EQ(ks::classify_relative(m, i - 1, x), ks::EJClass::Minus);
        for (auto x : k.plus) EXPECT_EQ(ks::classify_relative(m, i - 1, x), ks::EJClass::Plus);
        for (auto x : k.zero_minus) EXPECT_EQ(ks::classify_relative(m, i - 1, x), ks::EJClass::ZeroMinus);
        for (auto x : k.zero_plus) EXPECT_EQ(ks::classify_relative(m, i - 1, x), ks::EJClass::ZeroPlus);
        EXPECT_EQ(k.minus.size() + k.plus.size() + k.zero_minus.size() + k.zero_plus.size(), sh.labels.size());
      }
    }
  }
}

TEST(TypeA, MurphyBasis) {
  const auto& c2 = ctx(2);
  const auto b2 = ks::murphy_basis(c2);
  ASSERT_EQ(b2.size(), 2u);
  const auto& g2 = c2.group();
  EXPECT_EQ(b2[0].m, T(g2, "s1") + T(g2, "e", -q()));
  EXPECT_EQ(b2[1].m, T(g2, "e"));
  const auto b3 = ks::murphy_basis(ctx(3));
  EXPECT_EQ(b3.size(), 6u);
  for (int n = 2; n <= 4; ++n) {
    const auto basis = ks::murphy_basis(ctx(n));
    ks::LaurentSpan span(ctx(n).group().order());
    for (const auto& e : basis) span.insert(e.m);
    EXPECT_EQ(basis.size(), ctx(n).group().order());
    EXPECT_EQ(span.rank(), ctx(n).group().order());
    for (const auto& e : basis)
      if (e.s == e.t && e.s == ks::row_reading_tableau(e.lambda))
        EXPECT_EQ(e.m, ks::c_wj(*ctx(n).shape(e.lambda).system));
  }
  EXPECT_THROW(ks::murphy_basis(ctx(6)), ks::Error);
}

TEST(TypeA, ActionExamples) {
  const auto& c = ctx(3);
  const auto lambda = part({2, 1});
  const auto t1 = ks::specht_action_typea(c, lambda, 1);
  EXPECT_EQ(t1(0, 0), -q(-1));
  EXPECT_TRUE(t1(1, 0).is_zero());
  EXPECT_EQ(t1(1, 1), q());
  EXPECT_EQ(t1(0, 1), -q(2));
  const auto t2 = ks::specht_action_typea(c, lambda, 2);
  EXPECT_EQ(t2(1, 0), ks::LaurentInt(1));
  EXPECT_TRUE(t2(0, 0).is_zero());
}

TEST(TypeA, ActionAgreesAcrossConstructions) {
  for (int n = 2; n <= 5; ++n) {
    const auto& c = ctx(n);
    for (const auto& sh : c.shapes()) {
      std::vector<ks::LaurentMatrix> taus;
      for (int i = 1; i < n; ++i) {
        taus.push_back(ks::specht_action_typea(c, sh.lambda, i));
        EXPECT_EQ(taus.back(), ks::specht_action_quotient(c, sh.lambda, i)) << sh.lambda.to_string();
      }
      EXPECT_TRUE(ks::verify_relations(taus, c.group().spec()).ok()) << sh.lambda.to_string();
      const auto tr = ks::transition_matrices(c, sh.lambda);
      const auto w = ks::wgraph_typea(c, sh.lambda);
      EXPECT_TRUE(ks::verify_wgraph(w, c.group().spec()).ok());
      for (int i = 1; i < n; ++i) EXPECT_EQ(taus[static_cast<std::size_t>(i - 1)] * tr.C, tr.C * w.tau(i - 1));
    }
  }
}

TEST(TypeA, Transitions) {
  const auto& c = ctx(3);
  const auto tr = ks::transition_matrices(c, part({2, 1}));
  EXPECT_EQ(tr.C(0, 0), ks::LaurentInt(1));
  EXPECT_EQ(tr.C(0, 1), -q());
  EXPECT_EQ(tr.p(0, 1), ks::LaurentInt(1));
  EXPECT_EQ(ks::wgraph_typea(c, part({2, 1})).mu(0, 1), 1);
  for (int n = 2; n <= 6; ++n)
    for (const auto& sh : ctx(n).shapes()) {
      const auto t = ks::transition_matrices(ctx(n), sh.lambda);
      EXPECT_TRUE(t.C.is_upper_unitriangular());
      EXPECT_EQ(t.C * t.C_inv, ks::LaurentMatrix::identity(t.C.rows()));
      const auto w = ks::wgraph_typea(ctx(n), sh.lambda);
      for (std::size_t a = 0; a < t.C.rows(); ++a)
        for (std::size_t b = a + 1; b < t.C.rows(); ++b) {
          if (!t.C(a, b).is_zero()) EXPECT_GE(t.C(a, b).min_degree(), 1);
          EXPECT_TRUE(t.p(a, b).is_polynomial());
          EXPECT_EQ(t.p(a, b).coeff(0), ks::BigInt(w.mu(a, b)));
        }
    }
}

TEST(TypeA, TransitionGolden) {
  const auto& c = ctx(4);
  const auto lambda = part({2, 2});
  const auto tr = ks::transition_matrices(c, lambda);
  std::ifstream in(std::string(KLSPECHT_GOLDEN_DIR) + "/transition_2_2.json");
  ASSERT_TRUE(in.good());
  const ks::Json golden = ks::Json::parse(in);
  EXPECT_EQ(ks::to_json(tr.C), golden["C"]);
  EXPECT_EQ(ks::to_json(tr.C_inv), golden["Cinv"]);
  EXPECT_EQ(ks::to_json(tr.p), golden["p"]);
  EXPECT_EQ(ks::relative_kl(c.specht(lambda)).P, ks::relative_kl_oracle(ks::r_polynomials(c.specht(lambda))));
}

TEST(TypeA, LeftCellsAreRSClasses) {
  for (int n = 2; n <= 5; ++n) {
    const auto& c = ctx(n);
    const auto kl = ks::kl_basis(c.group_ptr());
    for (const auto& cell : ks::full_group_cells(kl)) {
      const auto Q = ks::rs_insert(c, cell.front()).second;
      for (auto w : cell) EXPECT_EQ(ks::rs_insert(c, w).second, Q);
      std::size_t count = 0;
      for (std::uint32_t w = 0; w < c.group().order(); ++w) count += ks::rs_insert(c, w).second == Q;
      EXPECT_EQ(count, cell.size());
    }
  }
}

TEST(TypeA, Caps) {
  EXPECT_THROW(ks::TypeAContext(8), ks::Error);
  const ks::TypeAContext c7(7);
  EXPECT_THROW(c7.specht(part({4, 3})), ks::Error);
}
