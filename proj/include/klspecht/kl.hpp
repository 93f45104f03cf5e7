#pragma once

// Classical Kazhdan-Lusztig C-basis of the Hecke algebra.
//
// C_w = T_w + sum_{y<w} p_{y,w} T_y with p_{y,w} in qZ[q] and
// bar(C_w) = C_w. Built by increasing length: for s the least left
// descent of w and v = sw,
//   C_w = (T_s - q) C_v - sum_{z<v, sz<z} mu(z,v) C_z.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "klspecht/hecke.hpp"

namespace klspecht {

class KLTable {
 public:
  KLTable() = default;

  /// Wraps precomputed C-basis columns (e.g. from a cache file); mu is rederived.
  KLTable(std::shared_ptr<const CoxeterGroup> group, std::vector<HeckeVector> columns)
      : group_(std::move(group)), c_(std::move(columns)) {
    if (c_.size() != group_->order()) throw Error(ErrorKind::SizeMismatch, "KL table size does not match group order");
    mu_below_.resize(c_.size());
    for (std::uint32_t w = 0; w < c_.size(); ++w) rebuild_mu(w);
  }

  const CoxeterGroup& group() const { return *group_; }
  std::shared_ptr<const CoxeterGroup> group_ptr() const { return group_; }

  /// C_w in the T-basis.
  const HeckeVector& c(std::uint32_t w) const { return c_[w]; }
  LaurentInt p(std::uint32_t y, std::uint32_t w) const { return c_[w].coeff(y); }

  /// Nonzero mu(y,w) with y < w, in increasing y.
  const std::vector<std::pair<std::uint32_t, int>>& mu_below(std::uint32_t w) const { return mu_below_[w]; }

  int mu(std::uint32_t y, std::uint32_t w) const {
    for (const auto& [z, m] : mu_below_[w])
      if (z == y) return m;
    return 0;
  }

 private:
  friend KLTable kl_basis(std::shared_ptr<const CoxeterGroup> group);

  void rebuild_mu(std::uint32_t w) {
    mu_below_[w].clear();
    for (const auto& [y, p] : c_[w].coords()) {
      if (y == w) continue;
      const auto m = static_cast<int>(-p.coeff(1));
      if (m != 0) mu_below_[w].emplace_back(y, m);
    }
  }

  std::shared_ptr<const CoxeterGroup> group_;
  std::vector<HeckeVector> c_;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> mu_below_;
};

inline KLTable kl_basis(std::shared_ptr<const CoxeterGroup> group) {
  KLTable table;
  table.group_ = group;
  const CoxeterGroup& g = *group;
  table.c_.resize(g.order());
  table.mu_below_.resize(g.order());
  table.c_[0] = HeckeVector::basis(&g, 0);
  for (std::uint32_t w = 1; w < g.order(); ++w) {
    const Generator s = g.first_letter(w);
    const std::uint32_t v = g.left_mul(s, w);
    const HeckeVector& cv = table.c_[v];
    HeckeVector cw = t_mul_generator(s, cv) - LaurentInt::q(1) * cv;
    for (const auto& [z, m] : table.mu_below_[v])
      if (g.left_descents(z).contains(s)) cw -= LaurentInt(m) * table.c_[z];
    table.c_[w] = std::move(cw);
    table.rebuild_mu(w);
  }
  return table;
}

inline KLTable kl_basis(const CoxeterSpec& spec) { return kl_basis(build_group(spec)); }

inline int mu(const KLTable& table, const GroupElement& y, const GroupElement& w) {
  require_same_group(y, w);
  if (y == w) throw Error(ErrorKind::InvalidArgument, "mu(y,w) needs y != w");
  return table.mu(y.index(), w.index());
}

/// Classical KL polynomial P_{y,w}(q) to this convention:
/// p = (-q)^diff * bar(P(q^2)).
inline LaurentInt convert_kl_convention(const LaurentInt& P, int length_diff) {
  if (!P.is_polynomial()) throw Error(ErrorKind::InvalidArgument, "P must lie in Z[q]");
  if (length_diff < 0) throw Error(ErrorKind::InvalidArgument, "length difference must be >= 0");
  LaurentInt sign_power = LaurentInt::monomial(length_diff % 2 == 0 ? 1 : -1, length_diff);
  return sign_power * P.substitute_power(2).bar();
}

/// T_s * C_w in C-coordinates.
inline HeckeVector c_mul_generator(Generator s, const KLTable& table, std::uint32_t w) {
  const CoxeterGroup& g = table.group();
  HeckeVector out(&g);
  const std::uint32_t sw = g.left_mul(s, w);
  if (g.length(sw) < g.length(w)) {
    out.add(w, -LaurentInt::q(-1));
    return out;
  }
  out.add(w, LaurentInt::q(1));
  out.add(sw, 1);
  for (const auto& [y, m] : table.mu_below(w))
    if (g.left_descents(y).contains(s)) out.add(y, LaurentInt(m));
  return out;
}

/// Expands a vector in C-coordinates into the T-basis.
inline HeckeVector c_to_t(const KLTable& table, const HeckeVector& in_c_basis) {
  HeckeVector out(&table.group());
  for (const auto& [w, a] : in_c_basis.coords()) out += a * table.c(w);
  return out;
}

}  // namespace klspecht
