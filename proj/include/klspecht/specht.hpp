#pragma once

// Generic Specht module S^J on E_J, its bar involution (R-polynomials),
// relative Kazhdan-Lusztig polynomials and their inverses.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "klspecht/cellular.hpp"
#include "klspecht/kl.hpp"

namespace klspecht {

/// A module with basis indexed by an ascending list of group elements,
/// closed under the recursions for R and relative KL polynomials.
struct BasedModule {
  const CoxeterGroup* group = nullptr;
  GeneratorSet J;
  std::vector<std::uint32_t> basis;
  std::vector<LaurentMatrix> action;

  std::size_t dim() const { return basis.size(); }
  bool contains(std::uint32_t w) const { return std::binary_search(basis.begin(), basis.end(), w); }
  std::size_t position(std::uint32_t w) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it == basis.end() || *it != w)
      throw Error(ErrorKind::InvalidArgument, "element " + group->word_string(w) + " is not a basis label");
    return static_cast<std::size_t>(it - basis.begin());
  }
};

/// Class of (s, x) relative to the basis labels: s x inside the basis gives
/// Minus or Plus by length; otherwise ZeroMinus or ZeroPlus by length.
inline EJClass classify_relative(const BasedModule& m, Generator s, std::uint32_t x) {
  const CoxeterGroup& g = *m.group;
  if (!m.contains(x)) throw Error(ErrorKind::InvalidArgument, "element " + g.word_string(x) + " is not a basis label");
  const std::uint32_t y = g.left_mul(s, x);
  const bool down = g.length(y) < g.length(x);
  if (m.contains(y)) return down ? EJClass::Minus : EJClass::Plus;
  return down ? EJClass::ZeroMinus : EJClass::ZeroPlus;
}

/// How T_s acts on b_x when x is in the zeroPlus class.
///   Quotient: exact action on M^J modulo the higher layers.
///   DropTerm: T_s b_x = q b_x, discarding T_x C_{t w_J} altogether.
enum class ZeroPlusRule { Quotient, DropTerm };

/// S^J with basis b_x = T_{x w_J} C_{w_J} (mod higher layers), x in E_J.
/// Column j of action(s) is T_s b_{E_J[j]}.
class SpechtModuleJ {
 public:
  const ParabolicSystem& system() const { return *system_; }
  std::shared_ptr<const ParabolicSystem> system_ptr() const { return system_; }
  const CoxeterGroup& group() const { return system_->group(); }
  const std::vector<std::uint32_t>& basis() const { return system_->EJ(); }
  std::size_t dim() const { return system_->EJ().size(); }
  ZeroPlusRule rule() const { return rule_; }
  const LaurentMatrix& action(Generator s) const { return action_.at(static_cast<std::size_t>(s)); }
  const LayerDecomposer& decomposer() const { return *decomposer_; }
  BasedModule based() const { return {&group(), system_->J(), basis(), action_}; }

  /// Projects an element of H*C_{w_J} onto S^J coordinates.
  LaurentVector project(const HeckeVector& h) const {
    const LayerDecomposition dec = decomposer_->decompose(h);
    LaurentVector v(dim());
    for (const auto& [x, c] : dec.ej_part) v[system_->ej_position(x)] = c;
    return v;
  }

  /// T-expansion of the lift T_{x w_J} C_{w_J} of b_x.
  HeckeVector lift(std::uint32_t x) const { return t_d_c_wj(*system_, system_->flip(x)); }

 private:
  friend SpechtModuleJ build_specht_module(std::shared_ptr<const ParabolicSystem>, ZeroPlusRule);

  std::shared_ptr<const ParabolicSystem> system_;
  std::shared_ptr<const LayerDecomposer> decomposer_;
  ZeroPlusRule rule_ = ZeroPlusRule::Quotient;
  std::vector<LaurentMatrix> action_;
};

inline SpechtModuleJ build_specht_module(std::shared_ptr<const ParabolicSystem> sys,
                                         ZeroPlusRule rule = ZeroPlusRule::Quotient) {
  SpechtModuleJ m;
  m.system_ = sys;
  m.rule_ = rule;
  m.decomposer_ = std::make_shared<LayerDecomposer>(sys->group(), sys->J());
  const std::size_t n = sys->EJ().size();
  const LaurentInt q = LaurentInt::q(1), qinv = LaurentInt::q(-1);
  for (Generator s = 0; s < sys->group().rank(); ++s) {
    LaurentMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t x = sys->EJ()[j];
      const EJClassification& c = sys->ej_class(s, x);
      switch (c.cls) {
        case EJClass::Minus:
          a(sys->ej_position(c.image), j) += 1;
          a(j, j) += q_minus_qinv();
          break;
        case EJClass::Plus:
          a(sys->ej_position(c.image), j) += 1;
          break;
        case EJClass::ZeroMinus:
          a(j, j) = -qinv;
          break;
        case EJClass::ZeroPlus:
          if (rule == ZeroPlusRule::DropTerm)
            a(j, j) = q;
          else
            a.set_column(j, m.project(t_mul_generator(s, m.lift(x))));
          break;
      }
    }
    m.action_.push_back(std::move(a));
  }
  return m;
}

/// T_s b_x in S^J coordinates.
inline LaurentVector specht_action(const SpechtModuleJ& m, Generator s, std::uint32_t x) {
  return m.action(s).column(m.system().ej_position(x));
}

/// The summand T_x C_{t w_J} of T_s T_x C_{w_J} for a zeroPlus pair (s, x)
/// with s x = x t, t outside J.
inline HeckeVector dropped_term(const ParabolicSystem& sys, const KLTable& kl, Generator s, std::uint32_t x) {
  const EJClassification& c = sys.ej_class(s, x);
  if (c.cls != EJClass::ZeroPlus) throw Error(ErrorKind::InvalidArgument, "not a zeroPlus pair");
  const CoxeterGroup& g = sys.group();
  const std::uint32_t tw = g.left_mul(c.witness, sys.wJ());
  return t_basis_mul(x, kl.c(tw));
}

/// Lower-layer pivot for w: least s with s w < w and s w a basis label.
inline Generator relative_pivot(const BasedModule& m, std::uint32_t w) {
  const CoxeterGroup& g = *m.group;
  for (Generator s : g.left_descents(w).to_vector())
    if (m.contains(g.left_mul(s, w))) return s;
  throw Error(ErrorKind::RecursionStuck, "no descent of " + g.word_string(w) + " stays inside the basis");
}

inline Generator relative_pivot(const ParabolicSystem& sys, std::uint32_t w) {
  const CoxeterGroup& g = sys.group();
  for (Generator s : g.left_descents(w).to_vector())
    if (sys.in_ej(g.left_mul(s, w))) return s;
  throw Error(ErrorKind::RecursionStuck, "no descent of " + g.word_string(w) + " stays inside E_J");
}

/// R(x, y) with bar(b_y) = sum_x R(x, y) b_x; rows and columns follow the basis.
inline LaurentMatrix r_polynomials(const BasedModule& m) {
  const CoxeterGroup& g = *m.group;
  const std::size_t n = m.dim();
  LaurentMatrix R(n, n);
  if (n == 0) return R;
  R(0, 0) = 1;
  const LaurentInt shift = LaurentInt::q(-1) - LaurentInt::q(1);
  for (std::size_t j = 1; j < n; ++j) {
    const std::uint32_t y = m.basis[j];
    const Generator s = relative_pivot(m, y);
    const LaurentVector prev = R.column(m.position(g.left_mul(s, y)));
    LaurentVector col = m.action[static_cast<std::size_t>(s)] * prev;
    for (std::size_t i = 0; i < n; ++i)
      if (!prev[i].is_zero()) col[i] += shift * prev[i];
    R.set_column(j, col);
  }
  return R;
}

inline LaurentMatrix r_polynomials(const SpechtModuleJ& m) { return r_polynomials(m.based()); }

/// Relative KL data. P(y, w) is the coefficient of b_y in C_w.
struct RelativeKLTable {
  const CoxeterGroup* group = nullptr;
  GeneratorSet J;
  std::vector<std::uint32_t> basis;
  LaurentMatrix P;
  LaurentMatrix R;

  std::size_t dim() const { return P.rows(); }
  /// Coefficient of q in -P(y, w), y != w.
  int mu(std::size_t y, std::size_t w) const {
    if (y == w) return 0;
    return static_cast<int>(-P(y, w).coeff(1));
  }
};

/// C_w = (T_s - q) C_v corrected by bar-invariant C_z to clear constant terms.
inline RelativeKLTable relative_kl(const BasedModule& m) {
  const CoxeterGroup& g = *m.group;
  const std::size_t n = m.dim();
  RelativeKLTable t{m.group, m.J, m.basis, LaurentMatrix(n, n), r_polynomials(m)};
  if (n == 0) return t;
  t.P(0, 0) = 1;
  const LaurentInt q = LaurentInt::q(1);
  for (std::size_t j = 1; j < n; ++j) {
    const std::uint32_t w = m.basis[j];
    const Generator s = relative_pivot(m, w);
    const std::size_t v = m.position(g.left_mul(s, w));
    const LaurentVector cv = t.P.column(v);
    LaurentVector col = m.action[static_cast<std::size_t>(s)] * cv;
    for (std::size_t i = 0; i < n; ++i)
      if (!cv[i].is_zero()) col[i] -= q * cv[i];
    for (std::size_t z = j; z-- > 0;) {
      if (col[z].is_zero()) continue;
      if (col[z].min_degree() < 0)
        throw Error(ErrorKind::Internal, "negative q-power in relative KL recursion at " + g.word_string(w));
      const BigInt c = col[z].coeff(0);
      if (c == 0) continue;
      const LaurentInt cc(c);
      for (std::size_t i = 0; i <= z; ++i)
        if (!t.P(i, z).is_zero()) col[i] -= cc * t.P(i, z);
    }
    if (!(col[j] == LaurentInt(1))) throw Error(ErrorKind::Internal, "relative KL leading coefficient is not 1");
    t.P.set_column(j, col);
  }
  return t;
}

inline RelativeKLTable relative_kl(const SpechtModuleJ& m) { return relative_kl(m.based()); }

/// Q = P^-1 - I off the diagonal (Q(y,w) + P(y,w) + sum_z Q(y,z) P(z,w) = 0).
inline LaurentMatrix q_polynomials(const RelativeKLTable& t) {
  LaurentMatrix inv = t.P.unitriangular_inverse();
  for (std::size_t i = 0; i < inv.rows(); ++i) inv(i, i) = 0;
  return inv;
}

}  // namespace klspecht
