#pragma once

// Parabolic coset systems D_J, D̄_J, E_J and the induced module M^J = H*C_{w_J}.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "klspecht/hecke.hpp"

namespace klspecht {

enum class DeodharClass { Minus, Plus, Zero };
enum class EJClass { Minus, Plus, ZeroMinus, ZeroPlus };

inline std::string to_string(DeodharClass c) {
  switch (c) {
    case DeodharClass::Minus: return "minus";
    case DeodharClass::Plus: return "plus";
    case DeodharClass::Zero: return "zero";
  }
  return "?";
}

inline std::string to_string(EJClass c) {
  switch (c) {
    case EJClass::Minus: return "minus";
    case EJClass::Plus: return "plus";
    case EJClass::ZeroMinus: return "zeroMinus";
    case EJClass::ZeroPlus: return "zeroPlus";
  }
  return "?";
}

struct DJClassification {
  DeodharClass cls;
  std::uint32_t image;     // s*d
  Generator witness = -1;  // t in J with s*d = d*t (zero class only)
};

struct EJClassification {
  EJClass cls;
  std::uint32_t image;     // s*x
  Generator witness = -1;  // t with s*x = x*t (zero classes only)
};

/// C_{w_K} = eps(w_K) q^l(w_K) sum_{w in W_K} eps(w) q^-l(w) T_w.
inline HeckeVector c_longest(const CoxeterGroup& g, GeneratorSet K) {
  const int top = g.length(g.longest_index(K));
  HeckeVector out(&g);
  for (std::uint32_t w : g.parabolic_subgroup(K)) {
    const int sign = ((top - g.length(w)) % 2 == 0) ? 1 : -1;
    out.add(w, LaurentInt::monomial(sign, top - g.length(w)));
  }
  return out;
}

class ParabolicSystem {
 public:
  const CoxeterGroup& group() const { return *group_; }
  std::shared_ptr<const CoxeterGroup> group_ptr() const { return group_; }
  GeneratorSet J() const { return J_; }
  std::uint32_t wJ() const { return wJ_; }

  /// Minimal representatives, ascending (length, ShortLex).
  const std::vector<std::uint32_t>& DJ() const { return dj_; }
  /// DJbar()[i] = DJ()[i] * w_J.
  const std::vector<std::uint32_t>& DJbar() const { return djbar_; }
  /// Elements with right descent set exactly J, ascending.
  const std::vector<std::uint32_t>& EJ() const { return ej_; }

  bool in_dj(std::uint32_t w) const { return dj_pos_[w] >= 0; }
  bool in_djbar(std::uint32_t w) const { return djbar_pos_[w] >= 0; }
  bool in_ej(std::uint32_t w) const { return ej_pos_[w] >= 0; }
  std::size_t dj_position(std::uint32_t d) const {
    if (!in_dj(d)) throw Error(ErrorKind::NotInDJ, group_->word_string(d) + " is not in D_J");
    return static_cast<std::size_t>(dj_pos_[d]);
  }
  std::size_t ej_position(std::uint32_t x) const {
    if (!in_ej(x)) throw Error(ErrorKind::NotInEJ, group_->word_string(x) + " is not in E_J");
    return static_cast<std::size_t>(ej_pos_[x]);
  }

  /// x * w_J (maps D_J <-> D̄_J).
  std::uint32_t flip(std::uint32_t w) const { return group_->multiply(w, wJ_); }

  const DJClassification& dj_class(Generator s, std::uint32_t d) const {
    return dj_class_[static_cast<std::size_t>(s)][dj_position(d)];
  }
  const EJClassification& ej_class(Generator s, std::uint32_t x) const {
    return ej_class_[static_cast<std::size_t>(s)][ej_position(x)];
  }

  /// Explicit T-expansion of C_{w_J}.
  const HeckeVector& c_wj() const { return c_wj_; }

 private:
  friend std::shared_ptr<const ParabolicSystem> build_parabolic(std::shared_ptr<const CoxeterGroup>, GeneratorSet);

  std::shared_ptr<const CoxeterGroup> group_;
  GeneratorSet J_;
  std::uint32_t wJ_ = 0;
  std::vector<std::uint32_t> dj_, djbar_, ej_;
  std::vector<int> dj_pos_, djbar_pos_, ej_pos_;
  std::vector<std::vector<DJClassification>> dj_class_;
  std::vector<std::vector<EJClassification>> ej_class_;
  HeckeVector c_wj_;
};

inline std::shared_ptr<const ParabolicSystem> build_parabolic(std::shared_ptr<const CoxeterGroup> group,
                                                              GeneratorSet J) {
  const CoxeterGroup& g = *group;
  if (!J.is_subset_of(g.all_generators())) throw Error(ErrorKind::InvalidArgument, "J is not a subset of S");
  auto sys = std::shared_ptr<ParabolicSystem>(new ParabolicSystem());
  sys->group_ = group;
  sys->J_ = J;
  sys->wJ_ = g.longest_index(J);
  const std::uint32_t n = g.order();
  sys->dj_pos_.assign(n, -1);
  sys->djbar_pos_.assign(n, -1);
  sys->ej_pos_.assign(n, -1);
  for (std::uint32_t w = 0; w < n; ++w) {
    const GeneratorSet r = g.right_descents(w);
    if ((r & J).empty()) sys->dj_.push_back(w);
    if (r == J) sys->ej_.push_back(w);
  }
  for (std::size_t i = 0; i < sys->dj_.size(); ++i) {
    sys->dj_pos_[sys->dj_[i]] = static_cast<int>(i);
    const std::uint32_t bar = g.multiply(sys->dj_[i], sys->wJ_);
    sys->djbar_.push_back(bar);
    sys->djbar_pos_[bar] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < sys->ej_.size(); ++i) sys->ej_pos_[sys->ej_[i]] = static_cast<int>(i);

  const GeneratorSet Jhat = J.complement(g.rank());
  auto find_witness = [&](std::uint32_t w, std::uint32_t sw, GeneratorSet pool) -> Generator {
    for (Generator t : pool.to_vector())
      if (g.right_mul(w, t) == sw) return t;
    throw Error(ErrorKind::Internal, "no conjugation witness for " + g.word_string(w));
  };
  sys->dj_class_.resize(static_cast<std::size_t>(g.rank()));
  sys->ej_class_.resize(static_cast<std::size_t>(g.rank()));
  for (Generator s = 0; s < g.rank(); ++s) {
    auto& dc = sys->dj_class_[static_cast<std::size_t>(s)];
    for (std::uint32_t d : sys->dj_) {
      const std::uint32_t sd = g.left_mul(s, d);
      if (sys->in_dj(sd))
        dc.push_back({g.length(sd) > g.length(d) ? DeodharClass::Plus : DeodharClass::Minus, sd});
      else
        dc.push_back({DeodharClass::Zero, sd, find_witness(d, sd, J)});
    }
    auto& ec = sys->ej_class_[static_cast<std::size_t>(s)];
    for (std::uint32_t x : sys->ej_) {
      const std::uint32_t sx = g.left_mul(s, x);
      const bool up = g.length(sx) > g.length(x);
      if (sys->in_ej(sx))
        ec.push_back({up ? EJClass::Plus : EJClass::Minus, sx});
      else if (up)
        ec.push_back({EJClass::ZeroPlus, sx, find_witness(x, sx, Jhat)});
      else
        ec.push_back({EJClass::ZeroMinus, sx, find_witness(x, sx, J)});
    }
  }
  sys->c_wj_ = c_longest(g, J);
  return sys;
}

inline DJClassification classify_dj(const ParabolicSystem& sys, Generator s, const GroupElement& d) {
  if (d.group() != &sys.group()) throw Error(ErrorKind::MixedGroups, "element from a different group");
  return sys.dj_class(s, d.index());
}

inline EJClassification classify_ej(const ParabolicSystem& sys, Generator s, const GroupElement& x) {
  if (x.group() != &sys.group()) throw Error(ErrorKind::MixedGroups, "element from a different group");
  return sys.ej_class(s, x.index());
}

inline HeckeVector c_wj(const ParabolicSystem& sys) { return sys.c_wj(); }

/// Element of M^J in the basis T_d C_{w_J}, d in D_J.
struct MJElement {
  const ParabolicSystem* system = nullptr;
  HeckeVector coords;  // keyed by d in D_J

  static MJElement basis(const ParabolicSystem& sys, std::uint32_t d, LaurentInt a = 1) {
    sys.dj_position(d);
    return {&sys, HeckeVector::basis(&sys.group(), d, std::move(a))};
  }
  friend bool operator==(const MJElement& a, const MJElement& b) { return a.coords == b.coords; }
};

/// T_s * m by the Deodhar cases.
inline MJElement mj_apply(const ParabolicSystem& sys, Generator s, const MJElement& m) {
  MJElement out{&sys, HeckeVector(&sys.group())};
  for (const auto& [d, a] : m.coords.coords()) {
    const DJClassification& c = sys.dj_class(s, d);
    switch (c.cls) {
      case DeodharClass::Minus:
        out.coords.add(c.image, a);
        out.coords.add(d, q_minus_qinv() * a);
        break;
      case DeodharClass::Plus:
        out.coords.add(c.image, a);
        break;
      case DeodharClass::Zero:
        out.coords.add(d, -LaurentInt::q(-1) * a);
        break;
    }
  }
  return out;
}

/// T_d C_{w_J} = sum_{v in W_J} p_{v,w_J} T_{dv}, lengths adding.
inline HeckeVector t_d_c_wj(const ParabolicSystem& sys, std::uint32_t d) {
  const CoxeterGroup& g = sys.group();
  HeckeVector out(&g);
  for (const auto& [v, p] : sys.c_wj().coords()) out.add(g.multiply(d, v), p);
  return out;
}

inline HeckeVector mj_embed(const ParabolicSystem& sys, const MJElement& m) {
  HeckeVector out(&sys.group());
  for (const auto& [d, a] : m.coords.coords()) {
    sys.dj_position(d);
    out += a * t_d_c_wj(sys, d);
  }
  return out;
}

}  // namespace klspecht
