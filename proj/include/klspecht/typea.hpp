#pragma once

// Type A: partitions, tableaux, Robinson-Schensted, Murphy basis and
// Specht modules S^lambda over the symmetric group A_{n-1}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "klspecht/wgraph.hpp"

namespace klspecht {

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "empty partition");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw Error(ErrorKind::InvalidArgument, "partition parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1]) throw Error(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing");
    }
  }

  /// "2,1" -> (2,1)
  static Partition parse(const std::string& text) {
    std::vector<int> p;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        p.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "bad partition '" + text + "'");
      }
    }
    return Partition(std::move(p));
  }

  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  std::size_t rows() const { return parts.size(); }

  Partition conjugate() const {
    std::vector<int> c(static_cast<std::size_t>(parts[0]), 0);
    for (int r : parts)
      for (int j = 0; j < r; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partitions of n, reverse lexicographic: (n), (n-1,1), ...
inline std::vector<Partition> partitions(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::SizeMismatch, "partitions of different sizes");
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.rows(), b.rows()); ++i) {
    sa += i < a.rows() ? a.parts[i] : 0;
    sb += i < b.rows() ? b.parts[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

/// Filling of a partition shape, stored row by row.
struct StandardTableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    std::vector<int> p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
  }
  int n() const {
    int k = 0;
    for (const auto& r : rows) k += static_cast<int>(r.size());
    return k;
  }

  bool is_row_standard() const {
    for (const auto& r : rows)
      for (std::size_t j = 1; j < r.size(); ++j)
        if (r[j - 1] >= r[j]) return false;
    return true;
  }
  bool is_standard() const {
    if (!is_row_standard()) return false;
    for (std::size_t i = 1; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i - 1][j] >= rows[i][j]) return false;
    std::vector<int> all;
    for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k)
      if (all[k] != static_cast<int>(k) + 1) return false;
    return true;
  }

  /// Transposed tableau t'.
  StandardTableau conjugate() const {
    StandardTableau t;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (t.rows.size() <= j) t.rows.emplace_back();
        t.rows[j].push_back(rows[i][j]);
      }
    return t;
  }

  /// (row, column) of entry k.
  std::pair<int, int> position(int k) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i][j] == k) return {static_cast<int>(i), static_cast<int>(j)};
    throw Error(ErrorKind::InvalidArgument, "entry not in tableau");
  }

  /// e.g. "[[1,2],[3]]"
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      s += (i ? ",[" : "[");
      for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows[i][j]);
      s += "]";
    }
    return s + "]";
  }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

/// t^lambda: 1..n filled along rows.
inline StandardTableau row_reading_tableau(const Partition& lambda) {
  StandardTableau t;
  int k = 1;
  for (int r : lambda.parts) {
    t.rows.emplace_back();
    for (int j = 0; j < r; ++j) t.rows.back().push_back(k++);
  }
  return t;
}

/// t_lambda: 1..n filled down the columns.
inline StandardTableau column_reading_tableau(const Partition& lambda) {
  return row_reading_tableau(lambda.conjugate()).conjugate();
}

inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  const int n = lambda.n();
  std::vector<StandardTableau> out;
  StandardTableau cur;
  cur.rows.assign(lambda.rows(), {});
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < lambda.rows(); ++i) {
      const std::size_t len = cur.rows[i].size();
      if (static_cast<int>(len) >= lambda.parts[i]) continue;
      if (i > 0 && cur.rows[i - 1].size() <= len) continue;
      cur.rows[i].push_back(k);
      self(self, k + 1);
      cur.rows[i].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Number of standard tableaux by the hook length formula.
inline std::uint64_t hook_length_count(const Partition& lambda) {
  const Partition c = lambda.conjugate();
  BigInt num = 1, den = 1;
  for (int k = 2; k <= lambda.n(); ++k) num *= k;
  for (std::size_t i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j)
      den *= (lambda.parts[i] - j - 1) + (c.parts[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
  return static_cast<std::uint64_t>(num / den);
}

struct TableauDescents {
  std::vector<int> I, I0, I1;  // values i in 1..n-1
};

/// i in I when i+1 sits in a lower row; I0 when also strictly left,
/// I1 when directly below.
inline TableauDescents tableau_descents(const StandardTableau& t) {
  TableauDescents d;
  for (int i = 1; i < t.n(); ++i) {
    const auto [ri, ci] = t.position(i);
    const auto [rj, cj] = t.position(i + 1);
    if (rj <= ri) continue;
    d.I.push_back(i);
    if (cj < ci) d.I0.push_back(i);
    if (cj == ci) d.I1.push_back(i);
  }
  return d;
}

inline bool contains_value(const std::vector<int>& v, int i) { return std::find(v.begin(), v.end(), i) != v.end(); }

using Permutation = std::vector<int>;  // one-line, values 1..n

/// d(t) in one-line form: the entries of t in the row-reading order of t^lambda.
inline Permutation coset_permutation(const StandardTableau& t) {
  if (!t.is_row_standard()) throw Error(ErrorKind::NotRowStandard, t.to_string() + " is not row standard");
  Permutation p;
  for (const auto& r : t.rows) p.insert(p.end(), r.begin(), r.end());
  std::vector<int> check = p;
  std::sort(check.begin(), check.end());
  for (std::size_t k = 0; k < check.size(); ++k)
    if (check[k] != static_cast<int>(k) + 1) throw Error(ErrorKind::NotRowStandard, "entries are not 1..n");
  return p;
}

/// Row-insertion Robinson-Schensted of a one-line word: (P, Q).
inline std::pair<StandardTableau, StandardTableau> rs_insert(const Permutation& w) {
  StandardTableau P, Q;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int x = w[k];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == P.rows.size()) {
        P.rows.push_back({x});
        Q.rows.push_back({static_cast<int>(k) + 1});
        break;
      }
      auto& row = P.rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        Q.rows[r].push_back(static_cast<int>(k) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {P, Q};
}

inline Permutation inverse_permutation(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

/// Data attached to one shape lambda.
struct ShapeData {
  Partition lambda;
  GeneratorSet J;
  std::uint32_t wJ = 0;
  std::uint32_t w_lambda = 0;
  std::shared_ptr<const ParabolicSystem> system;
  std::vector<StandardTableau> tableaux;  // ascending (l(d(t)), ShortLex d(t))
  std::vector<std::uint32_t> d;           // d(t) per tableau
  std::vector<std::uint32_t> labels;      // d(t) w_J, ascending
  std::vector<std::size_t> ej_index;      // position of d(t) w_J in labels per tableau
};

class TypeAContext {
 public:
  static constexpr int kDefaultMaxN = 7;
  static constexpr int kSpechtMaxN = 6;

  explicit TypeAContext(int n, int max_n = kDefaultMaxN) : n_(n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "type-A context needs n >= 2");
    if (n > max_n) throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds type-A cap " + std::to_string(max_n));
    group_ = build_group("A" + std::to_string(n - 1));
    const CoxeterGroup& g = *group_;
    perms_.resize(g.order());
    perms_[0].resize(static_cast<std::size_t>(n));
    std::iota(perms_[0].begin(), perms_[0].end(), 1);
    for (std::uint32_t w = 1; w < g.order(); ++w) {
      const Generator s = g.first_letter(w);
      Permutation p = perms_[g.left_mul(s, w)];
      for (int& v : p) {
        if (v == s + 1) v = s + 2;
        else if (v == s + 2) v = s + 1;
      }
      perms_[w] = std::move(p);
    }
    for (std::uint32_t w = 0; w < g.order(); ++w) index_.emplace(perms_[w], w);
    for (const Partition& lambda : partitions(n)) shapes_.push_back(build_shape(lambda));
  }

  int n() const { return n_; }
  const CoxeterGroup& group() const { return *group_; }
  std::shared_ptr<const CoxeterGroup> group_ptr() const { return group_; }
  const Permutation& permutation(std::uint32_t w) const { return perms_[w]; }
  std::uint32_t element(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error(ErrorKind::InvalidArgument, "not a permutation of 1..n");
    return it->second;
  }
  const std::vector<ShapeData>& shapes() const { return shapes_; }
  const ShapeData& shape(const Partition& lambda) const {
    for (const auto& s : shapes_)
      if (s.lambda == lambda) return s;
    throw Error(ErrorKind::SizeMismatch, "partition " + lambda.to_string() + " is not a partition of " + std::to_string(n_));
  }

  /// S^lambda = span{T_d(t) C_w_J} modulo the Murphy ideal of shapes
  /// strictly dominating lambda, on basis labels d(t) w_J.
  const BasedModule& specht(const Partition& lambda) const {
    const ShapeData& sh = shape(lambda);
    auto it = specht_.find(sh.lambda.parts);
    if (it != specht_.end()) return *it->second;
    if (n_ > kSpechtMaxN)
      throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n_) + " exceeds Specht cap " + std::to_string(kSpechtMaxN));
    const CoxeterGroup& g = *group_;
    std::vector<LaurentVector> ideal, gens(sh.labels.size());
    for (const ShapeData& mu : shapes_) {
      if (mu.lambda == sh.lambda || !dominance_leq(sh.lambda, mu.lambda)) continue;
      for (std::uint32_t a : mu.d)
        for (std::uint32_t b : mu.d) ideal.push_back(to_dense(murphy_element(*mu.system, a, b), g.order()));
    }
    for (std::size_t k = 0; k < sh.d.size(); ++k)
      gens[sh.ej_index[k]] = to_dense(t_d_c_wj(*sh.system, sh.d[k]), g.order());
    const QuotientSolver solver(g.order(), ideal, gens);
    auto m = std::make_shared<BasedModule>();
    m->group = &g;
    m->J = sh.J;
    m->basis = sh.labels;
    for (Generator s = 0; s < g.rank(); ++s) {
      LaurentMatrix a(m->dim(), m->dim());
      for (std::size_t k = 0; k < sh.d.size(); ++k)
        a.set_column(sh.ej_index[k],
                     solver.coordinates(to_dense(t_mul_generator(s, t_d_c_wj(*sh.system, sh.d[k])), g.order())));
      m->action.push_back(std::move(a));
    }
    specht_.emplace(sh.lambda.parts, m);
    return *m;
  }

  /// d(t) as a group element.
  std::uint32_t coset_word(const StandardTableau& t) const {
    if (t.n() != n_) throw Error(ErrorKind::SizeMismatch, "tableau size differs from n");
    return element(coset_permutation(t));
  }

 private:
  ShapeData build_shape(const Partition& lambda) const {
    const CoxeterGroup& g = *group_;
    ShapeData s;
    s.lambda = lambda;
    const StandardTableau top = row_reading_tableau(lambda);
    for (const auto& r : top.rows)
      for (std::size_t j = 1; j < r.size(); ++j) s.J.insert(r[j - 1] - 1);
    s.wJ = g.longest_index(s.J);
    s.w_lambda = coset_word(column_reading_tableau(lambda));
    s.system = build_parabolic(group_, s.J);
    std::vector<std::pair<std::uint32_t, StandardTableau>> ts;
    for (auto& t : standard_tableaux(lambda)) ts.emplace_back(coset_word(t), std::move(t));
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [d, t] : ts) {
      s.d.push_back(d);
      s.tableaux.push_back(std::move(t));
      s.labels.push_back(g.multiply(d, s.wJ));
    }
    std::sort(s.labels.begin(), s.labels.end());
    for (std::uint32_t d : s.d)
      s.ej_index.push_back(static_cast<std::size_t>(
          std::lower_bound(s.labels.begin(), s.labels.end(), g.multiply(d, s.wJ)) - s.labels.begin()));
    return s;
  }

  int n_;
  std::shared_ptr<const CoxeterGroup> group_;
  std::vector<Permutation> perms_;
  std::map<Permutation, std::uint32_t> index_;
  std::vector<ShapeData> shapes_;
  mutable std::map<std::vector<int>, std::shared_ptr<const BasedModule>> specht_;
};

inline std::pair<StandardTableau, StandardTableau> rs_insert(const TypeAContext& ctx, std::uint32_t w) {
  return rs_insert(ctx.permutation(w));
}

/// {d * w_J(lambda) : d <=_L w_lambda}, ascending.
inline std::vector<std::uint32_t> ej_lambda(const TypeAContext& ctx, const Partition& lambda) {
  const ShapeData& s = ctx.shape(lambda);
  const CoxeterGroup& g = ctx.group();
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 0; d < g.order(); ++d)
    if (g.weak_left_leq(d, s.w_lambda)) out.push_back(g.multiply(d, s.wJ));
  std::sort(out.begin(), out.end());
  return out;
}

struct TableauClassification {
  std::vector<std::uint32_t> minus, plus, zero_minus, zero_plus;  // elements d(t) w_J
};

/// Classes of E_J(lambda) under s_i read off from tableau descents:
/// minus <-> i in I0(t'), plus <-> i in I0(t), zeroMinus <-> i in I1(t'),
/// zeroPlus <-> i in I1(t).
inline TableauClassification ej_classification_by_tableaux(const TypeAContext& ctx, const Partition& lambda, int i) {
  if (i < 1 || i >= ctx.n()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  const ShapeData& s = ctx.shape(lambda);
  TableauClassification c;
  for (std::size_t k = 0; k < s.tableaux.size(); ++k) {
    const std::uint32_t x = ctx.group().multiply(s.d[k], s.wJ);
    const TableauDescents dt = tableau_descents(s.tableaux[k]);
    const TableauDescents dc = tableau_descents(s.tableaux[k].conjugate());
    if (contains_value(dc.I0, i)) c.minus.push_back(x);
    if (contains_value(dt.I0, i)) c.plus.push_back(x);
    if (contains_value(dc.I1, i)) c.zero_minus.push_back(x);
    if (contains_value(dt.I1, i)) c.zero_plus.push_back(x);
  }
  return c;
}

struct MurphyEntry {
  Partition lambda;
  StandardTableau s, t;
  HeckeVector m;
};

/// m_st = T_d(s) C_w_J(lambda) T_d(t)^-1 over all shapes and tableau pairs.
inline std::vector<MurphyEntry> murphy_basis(const TypeAContext& ctx, int cap = 5) {
  if (ctx.n() > cap) throw Error(ErrorKind::TooLarge, "n = " + std::to_string(ctx.n()) + " exceeds Murphy cap " + std::to_string(cap));
  std::vector<MurphyEntry> out;
  for (const ShapeData& sh : ctx.shapes())
    for (std::size_t a = 0; a < sh.tableaux.size(); ++a)
      for (std::size_t b = 0; b < sh.tableaux.size(); ++b)
        out.push_back({sh.lambda, sh.tableaux[a], sh.tableaux[b], murphy_element(*sh.system, sh.d[a], sh.d[b])});
  return out;
}

/// Relative KL data reindexed by tableaux:
/// C_{d(s) w_J} = m_s - q sum_t p(t, s) m_t.
struct TransitionData {
  LaurentMatrix C;      // C(t, s), unitriangular
  LaurentMatrix C_inv;  // m_s in terms of the C_{d(t) w_J}
  LaurentMatrix p;      // zero on the diagonal
};

inline TransitionData transition_matrices(const TypeAContext& ctx, const Partition& lambda) {
  const ShapeData& s = ctx.shape(lambda);
  const RelativeKLTable t = relative_kl(ctx.specht(lambda));
  const LaurentMatrix C = t.P.permuted(s.ej_index);
  const std::size_t n = C.rows();
  LaurentMatrix p(n, n);
  const LaurentInt mq = -LaurentInt::q(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !C(i, j).is_zero()) p(i, j) = exact_divide(C(i, j), mq);
  return {C, C.unitriangular_inverse(), p};
}

/// W-graph of S^lambda reindexed by tableaux.
inline WGraphDatum wgraph_typea(const TypeAContext& ctx, const Partition& lambda) {
  const ShapeData& s = ctx.shape(lambda);
  const WGraphDatum w = build_wgraph(relative_kl(ctx.specht(lambda)));
  std::vector<WGraphVertex> vs;
  for (std::size_t k : s.ej_index) vs.push_back(w.vertex(k));
  WGraphDatum out(&ctx.group(), ctx.group().rank(), std::move(vs));
  out.set_J(s.J);
  for (std::size_t a = 0; a < s.ej_index.size(); ++a)
    for (std::size_t b = a + 1; b < s.ej_index.size(); ++b)
      if (int m = w.mu(s.ej_index[a], s.ej_index[b]); m != 0) out.set_mu(a, b, m);
  return out;
}

/// Matrix of T_i on {m_t}: tableau case rules, with the I1(t) columns read
/// off from the W-graph through the transition matrix.
inline LaurentMatrix specht_action_typea(const TypeAContext& ctx, const Partition& lambda, int i) {
  if (i < 1 || i >= ctx.n()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  const ShapeData& s = ctx.shape(lambda);
  const CoxeterGroup& g = ctx.group();
  const Generator gen = i - 1;
  const std::size_t n = s.tableaux.size();
  std::vector<std::size_t> pos_of_d(g.order(), n);
  for (std::size_t k = 0; k < n; ++k) pos_of_d[s.d[k]] = k;

  const TransitionData tr = transition_matrices(ctx, lambda);
  const LaurentMatrix via_wgraph = tr.C * wgraph_typea(ctx, lambda).tau(gen) * tr.C_inv;

  LaurentMatrix a(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const TableauDescents dt = tableau_descents(s.tableaux[k]);
    const TableauDescents dc = tableau_descents(s.tableaux[k].conjugate());
    const std::uint32_t sd = g.left_mul(gen, s.d[k]);
    if (contains_value(dc.I0, i)) {
      a(pos_of_d[sd], k) += 1;
      a(k, k) += q_minus_qinv();
    } else if (contains_value(dt.I0, i)) {
      a(pos_of_d[sd], k) += 1;
    } else if (contains_value(dc.I1, i)) {
      a(k, k) = -LaurentInt::q(-1);
    } else {
      a.set_column(k, via_wgraph.column(k));
    }
  }
  return a;
}

/// T_i on {m_t} taken directly from the quotient module, for cross-checks.
inline LaurentMatrix specht_action_quotient(const TypeAContext& ctx, const Partition& lambda, int i) {
  const ShapeData& s = ctx.shape(lambda);
  if (i < 1 || i >= ctx.n()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  return ctx.specht(lambda).action[static_cast<std::size_t>(i - 1)].permuted(s.ej_index);
}

}  // namespace klspecht
