// Walk through the symmetric group S_3 (type A2): KL basis, the Specht
// module for J = {s1}, its W-graph, and the tableau form of S^(2,1).

#include <iostream>

#include "klspecht.hpp"

namespace ks = klspecht;

int main() {
  const auto g = ks::build_group(ks::CoxeterSpec::named("A2"));
  std::cout << "A2 has order " << g->order() << ", longest element " << g->word_string(g->order() - 1) << "\n";

  const ks::KLTable kl = ks::kl_basis(g);
  for (std::uint32_t w = 0; w < g->order(); ++w)
    std::cout << "  C_" << g->word_string(w) << " = " << kl.c(w).to_string() << "\n";

  ks::GeneratorSet J;
  J.insert(0);
  const auto sys = ks::build_parabolic(g, J);
  std::cout << "E_J for J={1}:";
  for (auto x : sys->EJ()) std::cout << " " << g->word_string(x);
  std::cout << "\n";

  const auto module = ks::build_specht_module(sys);
  const auto table = ks::relative_kl(module);
  const auto wgraph = ks::build_wgraph(module, table);
  std::cout << "relative P_{s1,s2s1} = " << table.P(0, 1) << ", mu = " << table.mu(0, 1) << "\n";
  std::cout << ks::wgraph_dot(wgraph);
  const auto check = ks::verify_wgraph(wgraph, g->spec());
  std::cout << "W-graph relations " << (check.ok() ? "hold" : "fail") << "\n";

  const ks::TypeAContext ctx(3);
  const ks::Partition lambda({2, 1});
  for (int i = 1; i < 3; ++i) {
    const auto a = ks::specht_action_typea(ctx, lambda, i);
    std::cout << "T_" << i << " on S^(2,1): [[" << a(0, 0) << ", " << a(0, 1) << "], [" << a(1, 0) << ", " << a(1, 1)
              << "]]\n";
  }
  return check.ok() ? 0 : 1;
}
