#pragma once

// Laurent polynomials in q with arbitrary-precision integer coefficients.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "klspecht/error.hpp"

namespace klspecht {

using BigInt = boost::multiprecision::cpp_int;

/// Element of A = Z[q, q^-1].
///
/// Stored densely as coeffs_[i] = coefficient of q^(low_ + i). The
/// representation is normalized: the first and last stored coefficients
/// are nonzero and the zero polynomial has no coefficients (low_ == 0).
/// Iteration is always in ascending exponent order.
class LaurentInt {
 public:
  LaurentInt() = default;
  LaurentInt(long long c) {  // NOLINT: integers embed as constants
    if (c != 0) coeffs_.emplace_back(c);
  }
  LaurentInt(const BigInt& c) {  // NOLINT
    if (c != 0) coeffs_.push_back(c);
  }

  /// c * q^e
  static LaurentInt monomial(const BigInt& c, int e) {
    LaurentInt r;
    if (c != 0) {
      r.low_ = e;
      r.coeffs_.push_back(c);
    }
    return r;
  }
  static LaurentInt q(int e = 1) { return monomial(1, e); }

  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static LaurentInt from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
    LaurentInt r;
    for (const auto& [e, c] : terms) r += monomial(c, e);
    return r;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const { return low_; }
  int max_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
  }

  BigInt coeff(int e) const {
    if (coeffs_.empty() || e < low_ || e > max_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  /// Nonzero (exponent, coefficient) pairs, exponents ascending.
  std::vector<std::pair<int, BigInt>> terms() const {
    std::vector<std::pair<int, BigInt>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  /// True for +-q^k, the units of A.
  bool is_unit() const {
    return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
  }
  bool is_monomial() const { return coeffs_.size() == 1; }

  /// True when every exponent is >= 0 (element of Z[q]).
  bool is_polynomial() const { return is_zero() || low_ >= 0; }

  LaurentInt bar() const {
    LaurentInt r;
    if (is_zero()) return r;
    r.low_ = -max_degree();
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return r;
  }

  /// Multiplication by q^k.
  LaurentInt shifted(int k) const {
    LaurentInt r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// Substitutes q -> q^k for k >= 1.
  LaurentInt substitute_power(int k) const {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "substitute_power needs k >= 1");
    LaurentInt r;
    for (const auto& [e, c] : terms()) r += monomial(c, e * k);
    return r;
  }

  /// Part with exponents in [lo, hi].
  LaurentInt truncated(int lo, int hi) const {
    LaurentInt r;
    for (const auto& [e, c] : terms())
      if (e >= lo && e <= hi) r += monomial(c, e);
    return r;
  }

  /// gcd of the integer coefficients (0 for the zero polynomial).
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
      if (c == 0) continue;
      g = boost::multiprecision::gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  /// Exact division by a nonzero integer; throws if inexact.
  LaurentInt divided_by(const BigInt& d) const {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    LaurentInt r = *this;
    for (auto& c : r.coeffs_) {
      if (c % d != 0) throw Error(ErrorKind::Internal, "inexact integer division");
      c /= d;
    }
    return r;
  }

  /// Exact division by a unit +-q^k.
  LaurentInt divided_by_unit(const LaurentInt& u) const {
    if (!u.is_unit()) throw Error(ErrorKind::InvalidArgument, "divisor is not a unit");
    LaurentInt r = shifted(-u.low_);
    if (u.coeffs_[0] < 0) r = -r;
    return r;
  }

  LaurentInt operator-() const {
    LaurentInt r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LaurentInt& operator+=(const LaurentInt& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(max_degree(), o.max_degree());
    if (lo < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
      low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  LaurentInt& operator-=(const LaurentInt& o) { return *this += -o; }

  LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
  }

  friend bool operator==(const LaurentInt& a, const LaurentInt& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form, e.g. "-q^-1 + 2 + q^3"; "0" for zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
      BigInt a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (e == 0) {
        os << a;
        continue;
      }
      if (a != 1) os << a;
      os << "q";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    while (coeffs_.back() == 0) coeffs_.pop_back();
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
  }

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentInt& p) { return os << p.to_string(); }

namespace detail {

// Dense polynomial helpers on coefficient vectors, lowest degree first.
using Poly = std::vector<BigInt>;

inline Poly to_poly(const LaurentInt& a) {
  Poly p;
  if (a.is_zero()) return p;
  for (int e = a.min_degree(); e <= a.max_degree(); ++e) p.push_back(a.coeff(e));
  return p;
}

inline LaurentInt from_poly(const Poly& p, int low = 0) {
  LaurentInt r;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) r += LaurentInt::monomial(p[i], low + static_cast<int>(i));
  return r;
}

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigInt poly_content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

inline Poly primitive_part(Poly p) {
  const BigInt g = poly_content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

// lc(b)^(deg a - deg b + 1) * a mod b
inline Poly pseudo_remainder(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace detail

/// gcd in Z[q] of the polynomial parts (q-powers stripped), positive leading
/// coefficient; an associate of the gcd in A. gcd(0, 0) = 0.
inline LaurentInt gcd(const LaurentInt& x, const LaurentInt& y) {
  if (x.is_zero() || y.is_zero()) {
    const LaurentInt& z = x.is_zero() ? y : x;
    if (z.is_zero()) return z;
    return z.shifted(-z.min_degree()) * LaurentInt(z.coeff(z.max_degree()) < 0 ? -1 : 1);
  }
  if (x.is_monomial() || y.is_monomial()) return LaurentInt(boost::multiprecision::gcd(x.content(), y.content()));
  using namespace detail;
  const BigInt c = boost::multiprecision::gcd(x.content(), y.content());
  Poly a = primitive_part(to_poly(x)), b = primitive_part(to_poly(y));
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? Poly{} : primitive_part(std::move(r));
    if (b.empty()) break;
  }
  const Poly g = b.empty() ? primitive_part(a) : Poly{1};
  return LaurentInt(c) * from_poly(g);
}

/// Exact quotient a / b in A; throws when b does not divide a.
inline LaurentInt exact_divide(const LaurentInt& a, const LaurentInt& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (a.is_zero()) return a;
  if (b.is_unit()) return a.divided_by_unit(b);
  using namespace detail;
  Poly num = to_poly(a);
  const Poly den = to_poly(b);
  if (num.size() < den.size()) throw Error(ErrorKind::Internal, "inexact Laurent division");
  Poly quo(num.size() - den.size() + 1);
  const BigInt& lb = den.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const BigInt& top = num[k + den.size() - 1];
    if (top % lb != 0) throw Error(ErrorKind::Internal, "inexact Laurent division");
    quo[k] = top / lb;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= quo[k] * den[i];
  }
  for (const auto& c : num)
    if (c != 0) throw Error(ErrorKind::Internal, "inexact Laurent division");
  return from_poly(quo, a.min_degree() - b.min_degree());
}

/// q - q^-1, the recurring coefficient of the quadratic relation.
inline LaurentInt q_minus_qinv() { return LaurentInt::q(1) - LaurentInt::q(-1); }

}  // namespace klspecht
