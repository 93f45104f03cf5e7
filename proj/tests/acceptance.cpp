// One [PASS]/[FAIL] line per acceptance criterion; exit status 1 if any fails.

#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "klspecht.hpp"

namespace ks = klspecht;

namespace {

const std::vector<std::string> kCore = {"A2", "A3", "B2", "B3", "I2(5)", "I2(7)"};

struct Tally {
  std::size_t checks = 0, failed = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  bool ok() const { return failed == 0; }
};

bool report(int id, const std::string& title, const Tally& t) {
  std::cout << (t.ok() ? "[PASS] " : "[FAIL] ") << id << " " << title << ": " << t.checks - t.failed << "/" << t.checks
            << " checks";
  if (!t.ok()) std::cout << "; first failure: " << t.first;
  std::cout << std::endl;
  return t.ok();
}

struct GroupData {
  std::shared_ptr<const ks::CoxeterGroup> g;
  std::shared_ptr<const ks::KLTable> kl;
  std::shared_ptr<const ks::CellularDatum> datum;
};

GroupData load(const std::string& tag) {
  auto g = ks::build_group(ks::CoxeterSpec::named(tag));
  return {g, std::make_shared<const ks::KLTable>(ks::kl_basis(g)), std::make_shared<const ks::CellularDatum>(g)};
}

std::string where(const std::string& tag, ks::GeneratorSet J) { return tag + " J={" + J.to_string() + "}"; }

Tally c_basis(const std::vector<GroupData>& groups) {
  Tally t;
  for (const auto& d : groups) {
    const auto& g = *d.g;
    const std::string tag = g.spec().name;
    for (std::uint32_t w = 0; w < g.order(); ++w) {
      t.check(ks::bar(d.kl->c(w)) == d.kl->c(w), tag + " bar C_" + g.word_string(w));
      for (const auto& [y, p] : d.kl->c(w).coords())
        if (y != w) t.check(p.min_degree() >= 1, tag + " p_{" + g.word_string(y) + "," + g.word_string(w) + "}");
      for (ks::Generator s = 0; s < g.rank(); ++s)
        t.check(ks::c_to_t(*d.kl, ks::c_mul_generator(s, *d.kl, w)) == ks::t_mul_generator(s, d.kl->c(w)),
                tag + " T_s C_w rule at " + g.word_string(w));
    }
    if (g.order() <= 48) {
      const auto oracle = ks::kl_basis_oracle(g);
      for (std::uint32_t w = 0; w < g.order(); ++w) t.check(oracle[w] == d.kl->c(w), tag + " oracle at " + g.word_string(w));
    }
  }
  return t;
}

Tally coset_laws(const std::vector<GroupData>& groups) {
  Tally t;
  for (const auto& d : groups) {
    const auto& g = *d.g;
    for (ks::GeneratorSet J : ks::all_subsets(g.rank())) {
      const auto& sys = d.datum->system(J);
      const std::string at = where(g.spec().name, J);
      std::vector<std::uint32_t> layers, bar = sys.DJbar();
      for (ks::GeneratorSet K : ks::all_subsets(g.rank()))
        if (J.is_subset_of(K)) layers.insert(layers.end(), d.datum->system(K).EJ().begin(), d.datum->system(K).EJ().end());
      std::sort(layers.begin(), layers.end());
      std::sort(bar.begin(), bar.end());
      t.check(std::adjacent_find(layers.begin(), layers.end()) == layers.end() && layers == bar, at + " layer union");
      const ks::GeneratorSet Jhat = J.complement(g.rank());
      for (ks::Generator s = 0; s < g.rank(); ++s) {
        for (auto x : sys.EJ()) {
          const auto& c = sys.ej_class(s, x);
          if (c.cls == ks::EJClass::Plus) {
            const auto& back = sys.ej_class(s, c.image);
            t.check(back.cls == ks::EJClass::Minus && back.image == x, at + " s E+ = E-");
          } else if (c.cls == ks::EJClass::Minus) {
            t.check(sys.ej_class(s, c.image).cls == ks::EJClass::Plus, at + " s E- = E+");
          } else {
            const bool pool = c.cls == ks::EJClass::ZeroMinus ? J.contains(c.witness) : Jhat.contains(c.witness);
            t.check(pool && g.left_mul(s, x) == g.right_mul(x, c.witness), at + " E_J witness");
          }
        }
        for (auto dd : sys.DJ()) {
          const auto& c = sys.dj_class(s, dd);
          if (c.cls == ks::DeodharClass::Zero)
            t.check(J.contains(c.witness) && g.left_mul(s, dd) == g.right_mul(dd, c.witness), at + " D_J witness");
          else if (c.cls == ks::DeodharClass::Plus)
            t.check(sys.dj_class(s, c.image).cls == ks::DeodharClass::Minus, at + " s D+ = D-");
        }
      }
    }
  }
  return t;
}

Tally relative_kl_soundness(const std::vector<GroupData>& groups) {
  Tally t;
  for (const auto& d : groups) {
    const auto& g = *d.g;
    for (ks::GeneratorSet J : ks::all_subsets(g.rank())) {
      const std::string at = where(g.spec().name, J);
      const auto m = ks::build_specht_module(d.datum->system_ptr(J));
      const auto R = ks::r_polynomials(m);
      const auto tab = ks::relative_kl(m);
      t.check(tab.P == ks::relative_kl_oracle(ks::r_polynomials_oracle(m)), at + " P equals oracle");
      for (std::size_t w = 0; w < tab.dim(); ++w) {
        t.check(tab.P(w, w) == ks::LaurentInt(1), at + " P_ww = 1");
        for (std::size_t y = 0; y < tab.dim(); ++y) {
          if (y == w || tab.P(y, w).is_zero()) continue;
          const std::string pair = g.word_string(tab.basis[y]) + " <= " + g.word_string(tab.basis[w]);
          t.check(tab.P(y, w).coeff(0) == 0 && tab.P(y, w).min_degree() >= 1, at + " constant term at " + pair);
          t.check(g.weak_left_leq(tab.basis[y], tab.basis[w]), at + " weak-order support " + pair);
        }
      }
    }
  }
  return t;
}

Tally wgraph_axioms(const std::vector<GroupData>& groups) {
  Tally t;
  for (const auto& d : groups) {
    const auto& g = *d.g;
    for (ks::GeneratorSet J : ks::all_subsets(g.rank())) {
      const auto w = ks::build_wgraph(ks::relative_kl(ks::build_specht_module(d.datum->system_ptr(J))));
      const auto r = ks::verify_wgraph(w, g.spec());
      for (const auto& p : r.passed) t.check(true, p);
      for (const auto& f : r.failures) t.check(false, where(g.spec().name, J) + " " + f);
    }
  }
  return t;
}

Tally cell_coherence(const std::vector<GroupData>& groups) {
  Tally t;
  for (const auto& d : groups) {
    const auto& g = *d.g;
    if (g.order() > 120) continue;
    const auto cells = ks::full_group_cells(*d.kl);
    for (ks::GeneratorSet J : ks::all_subsets(g.rank())) {
      const auto& sys = d.datum->system(J);
      const std::string at = where(g.spec().name, J);
      for (const auto& cell : cells) {
        bool same = true;
        for (auto w : cell) same = same && sys.in_ej(w) == sys.in_ej(cell.front());
        t.check(same, at + " E_J cuts a left cell");
      }
      const auto w = ks::build_wgraph(ks::relative_kl(ks::build_specht_module(d.datum->system_ptr(J))));
      try {
        const auto mats = ks::cell_module(*d.kl, sys.EJ());
        for (ks::Generator s = 0; s < g.rank(); ++s)
          t.check(mats[static_cast<std::size_t>(s)] == w.tau(s), at + " cell module s" + std::to_string(s + 1));
      } catch (const ks::Error& e) {
        t.check(false, at + " " + e.what());
      }
    }
  }
  return t;
}

Tally quotient_validity(const std::vector<GroupData>& groups) {
  Tally t;
  for (const auto& d : groups) {
    const auto& g = *d.g;
    if (g.order() > 48) continue;
    for (ks::GeneratorSet J : ks::all_subsets(g.rank())) {
      const auto& sys = d.datum->system(J);
      const auto ideal = ks::layer_ideal(*d.datum, J);
      for (ks::Generator s = 0; s < g.rank(); ++s)
        for (auto x : sys.EJ())
          if (sys.ej_class(s, x).cls == ks::EJClass::ZeroPlus) {
            const auto term = ks::dropped_term(sys, *d.kl, s, x);
            t.check(ideal.contains(term), where(g.spec().name, J) + " s" + std::to_string(s + 1) + " x=" + g.word_string(x));
          }
    }
  }
  return t;
}

Tally longest_square(const std::vector<GroupData>& groups) {
  Tally t;
  for (const auto& d : groups) {
    const auto& g = *d.g;
    if (g.order() > 48) continue;
    for (ks::GeneratorSet J : ks::all_subsets(g.rank())) {
      const auto& c = d.datum->system(J).c_wj();
      const int l = g.length(g.longest_index(J));
      ks::LaurentInt poincare;
      for (auto w : g.parabolic_subgroup(J)) poincare += ks::LaurentInt::q(2 * g.length(w));
      const ks::LaurentInt factor = ks::LaurentInt::monomial(l % 2 ? -1 : 1, -l) * poincare;
      t.check(ks::t_mul(c, c) == factor * c, where(g.spec().name, J));
    }
  }
  return t;
}

Tally type_a() {
  Tally t;
  for (int n = 2; n <= 5; ++n) {
    const ks::TypeAContext ctx(n);
    const auto& g = ctx.group();
    const std::string tag = "n=" + std::to_string(n);
    for (const auto& sh : ctx.shapes()) {
      const std::string at = tag + " lambda=" + sh.lambda.to_string();
      t.check(ks::ej_lambda(ctx, sh.lambda).size() == ks::standard_tableaux(sh.lambda).size(), at + " (a) |E| = #T");
      const auto [P, Q] = ks::rs_insert(ctx, g.multiply(sh.w_lambda, sh.wJ));
      const auto conj = sh.lambda.conjugate();
      t.check(P == ks::row_reading_tableau(conj) && Q == ks::column_reading_tableau(conj), at + " (b) RS pair");
      const auto tr = ks::transition_matrices(ctx, sh.lambda);
      bool tri = tr.C.is_upper_unitriangular();
      for (std::size_t a = 0; a < tr.C.rows(); ++a)
        for (std::size_t b = a + 1; b < tr.C.rows(); ++b)
          tri = tri && (tr.C(a, b).is_zero() || tr.C(a, b).min_degree() >= 1);
      t.check(tri, at + " (e) unitriangular in qZ[q]");
      const auto w = ks::wgraph_typea(ctx, sh.lambda);
      for (int i = 1; i < n; ++i)
        t.check(ks::specht_action_typea(ctx, sh.lambda, i) * tr.C == tr.C * w.tau(i - 1), at + " (e) conjugation");
    }
    const auto kl = ks::kl_basis(ctx.group_ptr());
    for (const auto& cell : ks::full_group_cells(kl)) {
      const auto Q = ks::rs_insert(ctx, cell.front()).second;
      std::size_t count = 0;
      for (std::uint32_t w = 0; w < g.order(); ++w) count += ks::rs_insert(ctx, w).second == Q;
      bool same = count == cell.size();
      for (auto w : cell) same = same && ks::rs_insert(ctx, w).second == Q;
      t.check(same, tag + " (c) left cell = RS class");
    }
    if (n <= 4) {
      ks::LaurentSpan span(g.order());
      for (const auto& e : ks::murphy_basis(ctx)) span.insert(e.m);
      t.check(span.rank() == g.order(), tag + " (d) Murphy rank");
    }
  }
  return t;
}

Tally rank_diagnostic() {
  Tally t;
  const auto g = ks::build_group(ks::CoxeterSpec::named("A2"));
  const ks::Json j = ks::Json::parse(ks::dump(ks::rank_report_json(ks::cellular_rank_report(ks::CellularDatum(g)))));
  t.check(j["sumOfSquares"] == 10, "sumOfSquares");
  t.check(j["groupOrder"] == 6, "groupOrder");
  t.check(j["rank"].get<int>() <= 6, "rank");
  t.check(j["perLayer"].size() == 4, "perLayer");
  t.check(!j["note"].get<std::string>().empty(), "note");
  std::cout << "  A2 rank report: sumOfSquares " << j["sumOfSquares"] << ", groupOrder " << j["groupOrder"] << ", rank "
            << j["rank"] << "; " << j["note"].get<std::string>() << std::endl;
  return t;
}

std::string run_cli(const std::string& args) {
  FILE* p = ::popen(("'" + std::string(KLSPECHT_CLI) + "' " + args + " 2>&1").c_str(), "r");
  if (!p) return "popen failed";
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = ::pclose(p);
  return out + "\nstatus " + std::to_string(status);
}

Tally determinism() {
  Tally t;
  for (const char* args :
       {"group --type B3 --format json", "klpoly --type B3 --format json", "ej --type B3 --j 2 --format json",
        "wgraph --type B3 --j 1,3 --format json", "wgraph --type A3 --j 2 --format dot", "cells --type H3 --format json",
        "specht --partition 3,2 --format json", "transition --partition 2,2,1 --format json",
        "murphy --n 4 --format json", "rankdiag --type B2 --format json", "verify --type A3 --level fast --format json"})
    t.check(run_cli(args) == run_cli(args), args);
  return t;
}

}  // namespace

int main() {
  std::vector<GroupData> core;
  for (const auto& tag : kCore) core.push_back(load(tag));
  std::vector<GroupData> with_a4 = core, upto120 = core;
  with_a4.push_back(load("A4"));
  upto120.push_back(with_a4.back());
  upto120.push_back(load("H3"));

  bool all = true;
  all &= report(1, "C-basis correctness", c_basis(with_a4));
  all &= report(2, "coset-system laws", coset_laws(core));
  all &= report(3, "relative-KL soundness", relative_kl_soundness(core));
  all &= report(4, "W-graph axioms", wgraph_axioms(core));
  all &= report(5, "cell coherence", cell_coherence(upto120));
  all &= report(6, "quotient validity", quotient_validity(core));
  all &= report(7, "longest parabolic square", longest_square(core));
  all &= report(8, "type A", type_a());
  all &= report(9, "rank diagnostic", rank_diagnostic());
  all &= report(10, "determinism", determinism());
  return all ? 0 : 1;
}
