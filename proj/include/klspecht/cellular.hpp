#pragma once

// Candidate cellular basis m_xy = T_x C_{w_J} T_y^*, layer decompositions
// of M^J and the layer ideals.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "klspecht/linalg.hpp"
#include "klspecht/parabolic.hpp"

namespace klspecht {

/// One summand c * T_d C_{w_K} with d = u * w_K and u in E_K.
struct LayerTerm {
  GeneratorSet K;
  std::uint32_t u;
  std::uint32_t d;
  LaurentInt coeff;
};

struct LayerDecomposition {
  GeneratorSet J;
  std::map<std::uint32_t, LaurentInt> ej_part;  // x in E_J -> coefficient of T_{x w_J} C_{w_J}
  std::vector<LayerTerm> higher;               // K strictly containing J, descending u
};

/// Writes elements of H*C_{w_J} in the basis T_{u w_K} C_{w_K}, u in E_K, K ⊇ J.
///
/// The basis vector for u has T-support u*W_K with T_u as its top term, so
/// peeling off the largest support index terminates.
class LayerDecomposer {
 public:
  LayerDecomposer(const CoxeterGroup& g, GeneratorSet J) : group_(&g), J_(J) {
    for (GeneratorSet K : all_subsets(g.rank()))
      if (J.is_subset_of(K)) c_.emplace(K.bits(), c_longest(g, K));
  }

  GeneratorSet J() const { return J_; }

  /// T_{u w_K} C_{w_K} in the T-basis.
  HeckeVector generator(std::uint32_t u) const {
    const CoxeterGroup& g = *group_;
    const GeneratorSet K = g.right_descents(u);
    const std::uint32_t d = g.multiply(u, g.longest_index(K));
    HeckeVector out(&g);
    for (const auto& [v, p] : c_.at(K.bits()).coords()) out.add(g.multiply(d, v), p);
    return out;
  }

  LayerDecomposition decompose(HeckeVector h) const {
    const CoxeterGroup& g = *group_;
    LayerDecomposition out{J_, {}, {}};
    while (!h.is_zero()) {
      const std::uint32_t u = h.leading_index();
      const LaurentInt c = h.coeff(u);
      const GeneratorSet K = g.right_descents(u);
      if (!J_.is_subset_of(K))
        throw Error(ErrorKind::InvalidArgument, "vector does not lie in H*C_{w_J} (top term " + g.word_string(u) + ")");
      h -= c * generator(u);
      if (K == J_)
        out.ej_part.emplace(u, c);
      else
        out.higher.push_back({K, u, g.multiply(u, g.longest_index(K)), c});
    }
    return out;
  }

  HeckeVector expand(const LayerDecomposition& dec) const {
    HeckeVector out(group_);
    for (const auto& [x, c] : dec.ej_part) out += c * generator(x);
    for (const auto& t : dec.higher) out += t.coeff * generator(t.u);
    return out;
  }

 private:
  const CoxeterGroup* group_;
  GeneratorSet J_;
  std::map<std::uint32_t, HeckeVector> c_;
};

/// Decomposition of T_{x w_J} C_{w_J} for x in D̄_J.
inline LayerDecomposition decompose_layer(const ParabolicSystem& sys, std::uint32_t x) {
  if (!sys.in_djbar(x)) throw Error(ErrorKind::NotInDJbar, sys.group().word_string(x) + " is not in D̄_J");
  LayerDecomposer dec(sys.group(), sys.J());
  return dec.decompose(t_d_c_wj(sys, sys.flip(x)));
}

inline LayerDecomposition decompose_layer(const ParabolicSystem& sys, const GroupElement& x) {
  if (x.group() != &sys.group()) throw Error(ErrorKind::MixedGroups, "element from a different group");
  return decompose_layer(sys, x.index());
}

/// Parabolic systems for every J ⊆ S.
class CellularDatum {
 public:
  explicit CellularDatum(std::shared_ptr<const CoxeterGroup> group) : group_(std::move(group)) {
    for (GeneratorSet J : all_subsets(group_->rank())) systems_.push_back(build_parabolic(group_, J));
  }

  const CoxeterGroup& group() const { return *group_; }
  std::shared_ptr<const CoxeterGroup> group_ptr() const { return group_; }
  const ParabolicSystem& system(GeneratorSet J) const { return *systems_.at(J.bits()); }
  std::shared_ptr<const ParabolicSystem> system_ptr(GeneratorSet J) const { return systems_.at(J.bits()); }

  /// All subsets of S in lexicographic order of their sorted generator lists.
  std::vector<GeneratorSet> omega_lex() const {
    auto subsets = all_subsets(group_->rank());
    std::sort(subsets.begin(), subsets.end(),
              [](GeneratorSet a, GeneratorSet b) { return a.to_vector() < b.to_vector(); });
    return subsets;
  }

 private:
  std::shared_ptr<const CoxeterGroup> group_;
  std::vector<std::shared_ptr<const ParabolicSystem>> systems_;  // indexed by subset bits
};

enum class RepresentativeForm { Minimal, Maximal };

/// T_x C_{w_J} T_y^*. Minimal form takes x, y in D_J; maximal form takes
/// x, y in D̄_J literally.
inline HeckeVector murphy_element(const ParabolicSystem& sys, std::uint32_t x, std::uint32_t y,
                                  RepresentativeForm form = RepresentativeForm::Minimal) {
  const CoxeterGroup& g = sys.group();
  const bool ok = form == RepresentativeForm::Minimal ? (sys.in_dj(x) && sys.in_dj(y))
                                                      : (sys.in_djbar(x) && sys.in_djbar(y));
  if (!ok)
    throw Error(ErrorKind::NotInCosetSet, "(" + g.word_string(x) + ", " + g.word_string(y) + ") not in the coset set");
  const HeckeVector left = t_basis_mul(x, sys.c_wj());
  return t_mul(left, HeckeVector::basis(&g, g.inverse(y)));
}

inline HeckeVector murphy_element(const CellularDatum& datum, GeneratorSet J, const GroupElement& x,
                                  const GroupElement& y, RepresentativeForm form = RepresentativeForm::Minimal) {
  require_same_group(x, y);
  if (x.group() != &datum.group()) throw Error(ErrorKind::MixedGroups, "element from a different group");
  return murphy_element(datum.system(J), x.index(), y.index(), form);
}

/// m_uv for u, v in E_J, built from minimal forms.
inline HeckeVector m_ej(const ParabolicSystem& sys, std::uint32_t u, std::uint32_t v) {
  return murphy_element(sys, sys.flip(u), sys.flip(v));
}

/// Spanning list of the layer ideal above J (all m_uv with u, v in E_K,
/// K strictly containing J) with an echelon form for membership.
struct LayerIdeal {
  GeneratorSet J;
  std::vector<HeckeVector> basis;
  LaurentSpan span;

  bool contains(const HeckeVector& h) const { return span.contains(h); }
};

inline LayerIdeal layer_ideal(const CellularDatum& datum, GeneratorSet J) {
  LayerIdeal out{J, {}, LaurentSpan(datum.group().order())};
  for (GeneratorSet K : all_subsets(datum.group().rank())) {
    if (K == J || !J.is_subset_of(K)) continue;
    const ParabolicSystem& sys = datum.system(K);
    for (std::uint32_t u : sys.EJ())
      for (std::uint32_t v : sys.EJ()) {
        out.basis.push_back(m_ej(sys, u, v));
        out.span.insert(out.basis.back());
      }
  }
  return out;
}

inline std::vector<HeckeVector> layer_ideal_basis(const CellularDatum& datum, GeneratorSet J) {
  return layer_ideal(datum, J).basis;
}

inline bool in_layer_ideal(const CellularDatum& datum, GeneratorSet J, const HeckeVector& h) {
  if (h.is_zero()) return true;
  return layer_ideal(datum, J).contains(h);
}

struct RankReport {
  std::uint32_t group_order = 0;
  std::size_t sum_of_squares = 0;
  std::size_t rank = 0;
  std::vector<std::pair<GeneratorSet, std::size_t>> per_layer;  // (J, |E_J|)
  std::string note;
};

inline RankReport cellular_rank_report(const CellularDatum& datum, std::uint32_t cap = 200) {
  const CoxeterGroup& g = datum.group();
  if (g.order() > cap)
    throw Error(ErrorKind::TooLarge, "group order " + std::to_string(g.order()) + " exceeds rank cap " + std::to_string(cap));
  RankReport r;
  r.group_order = g.order();
  LaurentSpan span(g.order());
  for (GeneratorSet J : all_subsets(g.rank())) {
    const ParabolicSystem& sys = datum.system(J);
    r.per_layer.emplace_back(J, sys.EJ().size());
    r.sum_of_squares += sys.EJ().size() * sys.EJ().size();
    for (std::uint32_t u : sys.EJ())
      for (std::uint32_t v : sys.EJ()) span.insert(m_ej(sys, u, v));
  }
  r.rank = span.rank();
  std::ostringstream note;
  if (r.sum_of_squares == r.group_order)
    note << "sum of |E_J|^2 equals |W|";
  else
    note << "sum of |E_J|^2 (" << r.sum_of_squares << ") differs from |W| (" << r.group_order << ")";
  note << "; the m_uv over all J span rank " << r.rank;
  if (r.rank < r.sum_of_squares) note << " and are linearly dependent";
  r.note = note.str();
  return r;
}

}  // namespace klspecht
