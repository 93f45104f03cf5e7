#pragma once

// W-graphs: construction from relative KL data, relation checks, cells.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "klspecht/specht.hpp"

namespace klspecht {

struct WGraphVertex {
  std::uint32_t element;  // group index, or any label for artificial graphs
  GeneratorSet descents;
};

class WGraphDatum {
 public:
  WGraphDatum() = default;
  WGraphDatum(const CoxeterGroup* group, int rank, std::vector<WGraphVertex> vertices)
      : group_(group), rank_(rank), vertices_(std::move(vertices)) {}

  const CoxeterGroup* group() const { return group_; }
  int rank() const { return rank_; }
  GeneratorSet J() const { return J_; }
  void set_J(GeneratorSet J) { J_ = J; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<WGraphVertex>& vertices() const { return vertices_; }
  const WGraphVertex& vertex(std::size_t i) const { return vertices_[i]; }

  /// Edges keyed by (a, b) with a < b.
  const std::map<std::pair<std::size_t, std::size_t>, int>& edges() const { return edges_; }

  void set_mu(std::size_t a, std::size_t b, int mu) {
    if (a == b) throw Error(ErrorKind::InvalidArgument, "W-graph loops are not allowed");
    const auto key = std::minmax(a, b);
    if (mu == 0)
      edges_.erase(key);
    else
      edges_[key] = mu;
  }
  int mu(std::size_t a, std::size_t b) const {
    auto it = edges_.find(std::minmax(a, b));
    return it == edges_.end() ? 0 : it->second;
  }

  /// tau_s gamma = -q^-1 gamma if s in I_gamma,
  /// else q gamma + sum over delta with s in I_delta of mu(delta, gamma) delta.
  LaurentMatrix tau(Generator s) const {
    const std::size_t n = size();
    LaurentMatrix t(n, n);
    for (std::size_t g = 0; g < n; ++g) {
      if (vertices_[g].descents.contains(s)) {
        t(g, g) = -LaurentInt::q(-1);
        continue;
      }
      t(g, g) = LaurentInt::q(1);
    }
    for (const auto& [key, m] : edges_) {
      const auto [a, b] = key;
      if (vertices_[a].descents.contains(s) && !vertices_[b].descents.contains(s)) t(a, b) += m;
      if (vertices_[b].descents.contains(s) && !vertices_[a].descents.contains(s)) t(b, a) += m;
    }
    return t;
  }

  std::string label(std::size_t i) const {
    return group_ ? group_->word_string(vertices_[i].element) : std::to_string(vertices_[i].element);
  }

 private:
  const CoxeterGroup* group_ = nullptr;
  int rank_ = 0;
  GeneratorSet J_;
  std::vector<WGraphVertex> vertices_;
  std::map<std::pair<std::size_t, std::size_t>, int> edges_;
};

/// Vertices are the basis labels with left descent sets; edge weights
/// symmetrized from mu(y, w), y < w.
inline WGraphDatum build_wgraph(const RelativeKLTable& t) {
  const CoxeterGroup& g = *t.group;
  std::vector<WGraphVertex> vs;
  for (std::uint32_t x : t.basis) vs.push_back({x, g.left_descents(x)});
  WGraphDatum w(&g, g.rank(), std::move(vs));
  w.set_J(t.J);
  for (std::size_t b = 0; b < t.dim(); ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (int mu = t.mu(a, b); mu != 0) w.set_mu(a, b, mu);
  return w;
}

inline WGraphDatum build_wgraph(const SpechtModuleJ&, const RelativeKLTable& t) { return build_wgraph(t); }

struct VerificationReport {
  std::vector<std::string> passed;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void check(bool cond, const std::string& what) { (cond ? passed : failures).push_back(what); }
  void merge(const VerificationReport& o) {
    passed.insert(passed.end(), o.passed.begin(), o.passed.end());
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

/// Product tau_s tau_t tau_s ... with m factors.
inline LaurentMatrix braid_word(const std::vector<LaurentMatrix>& taus, Generator s, Generator t, int m) {
  LaurentMatrix out = LaurentMatrix::identity(taus[0].rows());
  for (int i = 0; i < m; ++i) out = out * taus[static_cast<std::size_t>(i % 2 == 0 ? s : t)];
  return out;
}

/// Quadratic and braid relations for a family of operators indexed by S.
inline VerificationReport verify_relations(const std::vector<LaurentMatrix>& taus, const CoxeterSpec& spec,
                                           const std::string& prefix = "") {
  VerificationReport r;
  if (taus.empty() || taus[0].rows() == 0) {
    r.check(true, prefix + "empty module");
    return r;
  }
  const std::size_t n = taus[0].rows();
  const LaurentMatrix id = LaurentMatrix::identity(n);
  for (Generator s = 0; s < spec.rank; ++s) {
    const LaurentMatrix& a = taus[static_cast<std::size_t>(s)];
    const LaurentMatrix quad = (a + LaurentInt::q(-1) * id) * (a - LaurentInt::q(1) * id);
    r.check(quad.is_zero(), prefix + "quadratic s" + std::to_string(s + 1));
  }
  for (Generator s = 0; s < spec.rank; ++s)
    for (Generator t = s + 1; t < spec.rank; ++t) {
      const int m = spec.m(s, t);
      r.check(braid_word(taus, s, t, m) == braid_word(taus, t, s, m),
              prefix + "braid s" + std::to_string(s + 1) + " s" + std::to_string(t + 1));
    }
  return r;
}

inline VerificationReport verify_wgraph(const WGraphDatum& w, const CoxeterSpec& spec) {
  std::vector<LaurentMatrix> taus;
  for (Generator s = 0; s < spec.rank; ++s) taus.push_back(w.tau(s));
  return verify_relations(taus, spec, "W-graph J={" + w.J().to_string() + "} ");
}

struct CellPartition {
  std::vector<std::vector<std::size_t>> cells;  // each sorted; cells sorted by first vertex
  std::vector<std::size_t> cell_of;
  std::set<std::pair<std::size_t, std::size_t>> dag;  // (from, to): cell 'to' lies below cell 'from'
};

/// Strongly connected components of a digraph (Tarjan), normalized order.
inline CellPartition strongly_connected(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  std::sort(comps.begin(), comps.end());
  CellPartition p;
  p.cells = std::move(comps);
  p.cell_of.assign(n, 0);
  for (std::size_t c = 0; c < p.cells.size(); ++c)
    for (std::size_t v : p.cells[c]) p.cell_of[v] = c;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w : adj[v])
      if (p.cell_of[v] != p.cell_of[w]) p.dag.emplace(p.cell_of[v], p.cell_of[w]);
  return p;
}

/// Cells of the W-graph preorder: gamma -> delta when mu(delta, gamma) != 0
/// and I_delta is not contained in I_gamma, i.e. delta occurs in some tau_s gamma.
inline CellPartition kl_cells(const WGraphDatum& w) {
  std::vector<std::vector<std::size_t>> adj(w.size());
  for (const auto& [key, m] : w.edges()) {
    const auto [a, b] = key;
    if (!w.vertex(a).descents.is_subset_of(w.vertex(b).descents)) adj[b].push_back(a);
    if (!w.vertex(b).descents.is_subset_of(w.vertex(a).descents)) adj[a].push_back(b);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return strongly_connected(w.size(), adj);
}

/// Regular W-graph of the whole group from the classical KL table.
inline WGraphDatum regular_wgraph(const KLTable& kl) {
  const CoxeterGroup& g = kl.group();
  std::vector<WGraphVertex> vs;
  for (std::uint32_t w = 0; w < g.order(); ++w) vs.push_back({w, g.left_descents(w)});
  WGraphDatum out(&g, g.rank(), std::move(vs));
  out.set_J(g.all_generators());
  for (std::uint32_t w = 0; w < g.order(); ++w)
    for (const auto& [y, m] : kl.mu_below(w)) out.set_mu(y, w, m);
  return out;
}

/// Left cells of W as lists of group indices.
inline std::vector<std::vector<std::uint32_t>> full_group_cells(const KLTable& kl) {
  const CellPartition p = kl_cells(regular_wgraph(kl));
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& c : p.cells) out.emplace_back(c.begin(), c.end());
  return out;
}

/// Matrices of T_s on span{C_w : w in cellUnion}, discarding coefficients
/// outside the union. Rows and columns follow ascending group index.
inline std::vector<LaurentMatrix> cell_module(const KLTable& kl, std::vector<std::uint32_t> cell_union) {
  const CoxeterGroup& g = kl.group();
  std::sort(cell_union.begin(), cell_union.end());
  cell_union.erase(std::unique(cell_union.begin(), cell_union.end()), cell_union.end());
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < cell_union.size(); ++i) {
    if (cell_union[i] >= g.order()) throw Error(ErrorKind::InvalidArgument, "element index out of range");
    pos[cell_union[i]] = static_cast<int>(i);
  }
  for (const auto& cell : full_group_cells(kl)) {
    const bool first = pos[cell.front()] >= 0;
    for (std::uint32_t w : cell)
      if ((pos[w] >= 0) != first)
        throw Error(ErrorKind::NotCellClosed, "element set cuts the left cell containing " + g.word_string(w));
  }
  std::vector<LaurentMatrix> out;
  const std::size_t n = cell_union.size();
  for (Generator s = 0; s < g.rank(); ++s) {
    LaurentMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const HeckeVector image = c_mul_generator(s, kl, cell_union[j]);
      for (const auto& [y, c] : image.coords())
        if (pos[y] >= 0) a(static_cast<std::size_t>(pos[y]), j) = c;
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace klspecht
