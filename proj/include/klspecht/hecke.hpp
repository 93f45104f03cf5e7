#pragma once

// The Hecke algebra in its T-basis: T_s^2 = 1 + (q - q^-1) T_s.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "klspecht/coxeter.hpp"
#include "klspecht/laurent.hpp"

namespace klspecht {

/// Finite A-linear combination of basis elements indexed by a group.
/// Used for T-basis coordinates, and for C-basis coordinates where noted.
class HeckeVector {
 public:
  using Coords = std::map<std::uint32_t, LaurentInt>;

  HeckeVector() = default;
  explicit HeckeVector(const CoxeterGroup* group) : group_(group) {}

  /// a * T_w
  static HeckeVector basis(const CoxeterGroup* group, std::uint32_t w, LaurentInt a = 1) {
    HeckeVector h(group);
    h.add(w, a);
    return h;
  }

  const CoxeterGroup* group() const { return group_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  std::size_t size() const { return coords_.size(); }

  LaurentInt coeff(std::uint32_t w) const {
    auto it = coords_.find(w);
    return it == coords_.end() ? LaurentInt() : it->second;
  }

  void add(std::uint32_t w, const LaurentInt& a) {
    if (a.is_zero()) return;
    auto [it, inserted] = coords_.try_emplace(w, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) coords_.erase(it);
    }
  }

  /// Largest basis index in the support; support must be nonempty.
  std::uint32_t leading_index() const { return coords_.rbegin()->first; }

  HeckeVector& operator+=(const HeckeVector& o) {
    adopt_group(o);
    for (const auto& [w, a] : o.coords_) add(w, a);
    return *this;
  }
  HeckeVector& operator-=(const HeckeVector& o) {
    adopt_group(o);
    for (const auto& [w, a] : o.coords_) add(w, -a);
    return *this;
  }
  HeckeVector& operator*=(const LaurentInt& a) {
    if (a.is_zero()) {
      coords_.clear();
      return *this;
    }
    for (auto& [w, c] : coords_) c = c * a;
    return *this;
  }

  friend HeckeVector operator+(HeckeVector a, const HeckeVector& b) { return a += b; }
  friend HeckeVector operator-(HeckeVector a, const HeckeVector& b) { return a -= b; }
  friend HeckeVector operator*(const LaurentInt& a, HeckeVector h) { return h *= a; }
  friend HeckeVector operator*(HeckeVector h, const LaurentInt& a) { return h *= a; }
  HeckeVector operator-() const { return (*this) * LaurentInt(-1); }

  friend bool operator==(const HeckeVector& a, const HeckeVector& b) { return a.coords_ == b.coords_; }

  /// e.g. "T_s1 + (-q)T_e"
  std::string to_string(const std::string& basis_name = "T") const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [w, a] : coords_) {
      if (!out.empty()) out += " + ";
      const std::string name = basis_name + "_" + (group_ ? group_->word_string(w) : std::to_string(w));
      out += (a == LaurentInt(1)) ? name : "(" + a.to_string() + ")" + name;
    }
    return out;
  }

 private:
  void adopt_group(const HeckeVector& o) {
    if (group_ == nullptr) group_ = o.group_;
    else if (o.group_ != nullptr && o.group_ != group_)
      throw Error(ErrorKind::MixedGroups, "Hecke vectors from different groups");
  }

  const CoxeterGroup* group_ = nullptr;
  Coords coords_;
};

/// T_s * h (left) or h * T_s (right).
inline HeckeVector t_mul_generator(Generator s, const HeckeVector& h, Side side = Side::Left) {
  if (h.group() == nullptr) return h;
  const CoxeterGroup& g = *h.group();
  HeckeVector out(&g);
  const LaurentInt shift = q_minus_qinv();
  for (const auto& [w, a] : h.coords()) {
    const std::uint32_t x = side == Side::Left ? g.left_mul(s, w) : g.right_mul(w, s);
    out.add(x, a);
    if (g.length(x) < g.length(w)) out.add(w, shift * a);
  }
  return out;
}

/// T_s^-1 * h = (T_s + q^-1 - q) * h.
inline HeckeVector t_inverse_generator(Generator s, const HeckeVector& h, Side side = Side::Left) {
  HeckeVector out = t_mul_generator(s, h, side);
  out += h * (LaurentInt::q(-1) - LaurentInt::q(1));
  return out;
}

/// T_w * h, expanding T_w along the normal form of w.
inline HeckeVector t_basis_mul(std::uint32_t w, const HeckeVector& h) {
  if (h.group() == nullptr) return h;
  const Word letters = h.group()->word(w);
  HeckeVector out = h;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = t_mul_generator(*it, out);
  return out;
}

inline HeckeVector t_mul(const HeckeVector& h1, const HeckeVector& h2) {
  if (h1.group() != nullptr && h2.group() != nullptr && h1.group() != h2.group())
    throw Error(ErrorKind::MixedGroups, "Hecke vectors from different groups");
  const CoxeterGroup* g = h1.group() ? h1.group() : h2.group();
  HeckeVector out(g);
  if (h1.is_zero() || h2.is_zero()) return out;
  for (const auto& [w, a] : h1.coords()) out += a * t_basis_mul(w, h2);
  return out;
}

/// Ring involution: coefficients barred and T_w -> (T_{w^-1})^-1.
inline HeckeVector bar(const HeckeVector& h) {
  const CoxeterGroup* g = h.group();
  HeckeVector out(g);
  for (const auto& [w, a] : h.coords()) {
    // bar(T_w) = T_{s1}^-1 ... T_{sk}^-1 for the normal form s1...sk of w.
    const Word letters = g->word(w);
    HeckeVector v = HeckeVector::basis(g, 0);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = t_inverse_generator(*it, v);
    out += a.bar() * v;
  }
  return out;
}

/// A-linear anti-involution T_w -> T_{w^-1}.
inline HeckeVector star(const HeckeVector& h) {
  HeckeVector out(h.group());
  for (const auto& [w, a] : h.coords()) out.add(h.group()->inverse(w), a);
  return out;
}

}  // namespace klspecht
