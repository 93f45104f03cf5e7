#pragma once

#include <map>
#include <memory>
#include <string>

#include "klspecht.hpp"

namespace fixtures {

namespace ks = klspecht;

inline std::shared_ptr<const ks::CoxeterGroup> group(const std::string& tag) {
  static std::map<std::string, std::shared_ptr<const ks::CoxeterGroup>> cache;
  auto& g = cache[tag];
  if (!g) g = ks::build_group(ks::CoxeterSpec::named(tag));
  return g;
}

inline const ks::KLTable& kl(const std::string& tag) {
  static std::map<std::string, std::unique_ptr<ks::KLTable>> cache;
  auto& t = cache[tag];
  if (!t) t = std::make_unique<ks::KLTable>(ks::kl_basis(group(tag)));
  return *t;
}

/// "e" or "s1s2s1" to a group index.
inline std::uint32_t el(const ks::CoxeterGroup& g, const std::string& word) {
  ks::Word w;
  if (word != "e")
    for (std::size_t i = 0; i < word.size();) {
      std::size_t j = i + 1;
      while (j < word.size() && word[j] != 's') ++j;
      w.push_back(std::stoi(word.substr(i + 1, j - i - 1)) - 1);
      i = j;
    }
  return g.from_word(w);
}

inline ks::GroupElement ge(const ks::CoxeterGroup& g, const std::string& word) { return g.element(el(g, word)); }

inline ks::GeneratorSet gens(std::initializer_list<int> one_based) {
  ks::GeneratorSet J;
  for (int s : one_based) J.insert(s - 1);
  return J;
}

inline ks::LaurentInt q(int e = 1) { return ks::LaurentInt::q(e); }

inline ks::HeckeVector T(const ks::CoxeterGroup& g, const std::string& word, ks::LaurentInt a = 1) {
  return ks::HeckeVector::basis(&g, el(g, word), std::move(a));
}

}  // namespace fixtures
