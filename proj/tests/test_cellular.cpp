#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fixtures;

TEST(Cellular, MurphyElements) {
  const ks::CellularDatum datum(group("A2"));
  const auto& g = datum.group();
  const auto J = gens({1});
  EXPECT_EQ(ks::murphy_element(datum, J, g.identity(), g.identity()), T(g, "s1") + T(g, "e", -q()));
  EXPECT_EQ(ks::murphy_element(datum, J, ge(g, "s2"), g.identity()), T(g, "s2s1") + T(g, "s2", -q()));
  try {
    ks::murphy_element(datum, J, ge(g, "s1"), g.identity());
    FAIL();
  } catch (const ks::Error& e) {
    EXPECT_EQ(e.kind(), ks::ErrorKind::NotInCosetSet);
  }
}

TEST(Cellular, MaximalFormAtLongest) {
  const ks::CellularDatum datum(group("A2"));
  const auto& g = datum.group();
  const auto w0 = ge(g, "s1s2s1");
  const auto m = ks::murphy_element(datum, g.all_generators(), w0, w0, ks::RepresentativeForm::Maximal);
  EXPECT_EQ(m, q(-6) * fixtures::kl("A2").c(w0.index()));
}

TEST(Cellular, LongestParabolicSquare) {
  for (const char* tag : {"A2", "B2", "A3", "I2(5)", "B3"}) {
    const auto g = group(tag);
    for (ks::GeneratorSet J : ks::all_subsets(g->rank())) {
      const auto c = ks::c_longest(*g, J);
      const int l = g->length(g->longest_index(J));
      ks::LaurentInt poincare;
      for (auto w : g->parabolic_subgroup(J)) poincare += q(2 * g->length(w));
      EXPECT_EQ(ks::t_mul(c, c), ks::LaurentInt(l % 2 ? -1 : 1) * q(-l) * poincare * c) << tag << " " << J.to_string();
    }
  }
}

TEST(Cellular, StarSwapsIndices) {
  const ks::CellularDatum datum(group("B2"));
  for (ks::GeneratorSet J : ks::all_subsets(2)) {
    const auto& sys = datum.system(J);
    for (auto u : sys.EJ())
      for (auto v : sys.EJ()) EXPECT_EQ(ks::star(ks::m_ej(sys, u, v)), ks::m_ej(sys, v, u));
  }
}

TEST(Cellular, LayerDecomposition) {
  const ks::CellularDatum datum(group("A2"));
  const auto& g = datum.group();
  const auto& sys = datum.system(gens({1}));
  const auto triv = ks::decompose_layer(sys, ge(g, "s2s1"));
  EXPECT_EQ(triv.ej_part.size(), 1u);
  EXPECT_EQ(triv.ej_part.at(el(g, "s2s1")), ks::LaurentInt(1));
  EXPECT_TRUE(triv.higher.empty());

  const auto& top = datum.system(g.all_generators());
  const auto d = ks::decompose_layer(top, ge(g, "s1s2s1"));
  EXPECT_EQ(d.ej_part.at(g.order() - 1), ks::LaurentInt(1));
  EXPECT_TRUE(d.higher.empty());

  const auto mixed = ks::decompose_layer(sys, ge(g, "s1s2s1"));
  EXPECT_FALSE(mixed.higher.empty());
  const ks::LayerDecomposer dec(g, gens({1}));
  EXPECT_EQ(dec.expand(mixed), ks::t_d_c_wj(sys, el(g, "s1s2")));
  EXPECT_THROW(ks::decompose_layer(sys, ge(g, "s2")), ks::Error);
}

TEST(Cellular, LayerIdeal) {
  const ks::CellularDatum datum(group("A2"));
  const auto& g = datum.group();
  const auto& kl = fixtures::kl("A2");
  EXPECT_TRUE(ks::layer_ideal_basis(datum, g.all_generators()).empty());
  EXPECT_TRUE(ks::in_layer_ideal(datum, gens({1}), ks::HeckeVector(&g)));
  EXPECT_TRUE(ks::in_layer_ideal(datum, gens({1}), kl.c(g.order() - 1)));
  EXPECT_FALSE(ks::in_layer_ideal(datum, gens({1}), kl.c(el(g, "s1"))));
}

TEST(Cellular, RankReport) {
  const ks::CellularDatum a1(group("A1"));
  auto r = ks::cellular_rank_report(a1);
  EXPECT_EQ(r.group_order, 2u);
  EXPECT_EQ(r.sum_of_squares, 2u);
  EXPECT_EQ(r.rank, 2u);

  const ks::CellularDatum a2(group("A2"));
  r = ks::cellular_rank_report(a2);
  EXPECT_EQ(r.group_order, 6u);
  EXPECT_EQ(r.sum_of_squares, 10u);
  EXPECT_EQ(r.rank, 6u);
  EXPECT_NE(r.note.find("differs"), std::string::npos);

  const ks::CellularDatum b2(group("B2"));
  r = ks::cellular_rank_report(b2);
  EXPECT_EQ(r.group_order, 8u);
  EXPECT_EQ(r.sum_of_squares, 20u);
  EXPECT_LE(r.rank, 8u);

  EXPECT_THROW(ks::cellular_rank_report(ks::CellularDatum(group("A4")), 100), ks::Error);
}

TEST(Cellular, GeneratorActionModuloLayers) {
  for (const char* tag : {"A2", "B2", "I2(5)"}) {
    const ks::CellularDatum datum(group(tag));
    const auto& g = datum.group();
    for (ks::GeneratorSet J : ks::all_subsets(g.rank())) {
      const auto& sys = datum.system(J);
      const auto ideal = ks::layer_ideal(datum, J);
      const auto m = ks::build_specht_module(datum.system_ptr(J));
      for (auto u : sys.EJ())
        for (auto v : sys.EJ())
          for (ks::Generator s = 0; s < g.rank(); ++s) {
            ks::HeckeVector diff = ks::t_mul_generator(s, ks::m_ej(sys, u, v));
            const auto col = ks::specht_action(m, s, u);
            for (std::size_t k = 0; k < col.size(); ++k)
              if (!col[k].is_zero()) diff -= col[k] * ks::m_ej(sys, sys.EJ()[k], v);
            EXPECT_TRUE(ideal.contains(diff)) << tag;
          }
    }
  }
}
