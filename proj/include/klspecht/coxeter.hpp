#pragma once

// Finite Coxeter groups: enumeration, element arithmetic, lengths,
// descent sets, Bruhat and weak orders, parabolic data.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "klspecht/error.hpp"

namespace klspecht {

using Generator = int;  // 0-based; printed 1-based as s1, s2, ...

/// Subset of the generating set S, as a bitmask over generator indices.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<Generator> gens) {
    for (Generator s : gens) insert(s);
  }
  static GeneratorSet from_vector(const std::vector<Generator>& gens) {
    GeneratorSet r;
    for (Generator s : gens) r.insert(s);
    return r;
  }
  static constexpr GeneratorSet full(int rank) {
    return GeneratorSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }

  constexpr bool contains(Generator s) const { return (bits_ >> s) & 1u; }
  void insert(Generator s) {
    if (s < 0 || s >= 32) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    bits_ |= (1u << s);
  }
  void erase(Generator s) { bits_ &= ~(1u << s); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool is_subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr GeneratorSet complement(int rank) const { return GeneratorSet(full(rank).bits_ & ~bits_); }

  std::vector<Generator> to_vector() const {
    std::vector<Generator> out;
    for (Generator s = 0; s < 32; ++s)
      if (contains(s)) out.push_back(s);
    return out;
  }
  /// 1-based, comma separated ("" for the empty set).
  std::string to_string() const {
    std::string out;
    for (Generator s : to_vector()) {
      if (!out.empty()) out += ",";
      out += std::to_string(s + 1);
    }
    return out;
  }

  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ | b.bits_); }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;
  friend constexpr auto operator<=>(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of {0..rank-1}, in increasing bitmask order.
inline std::vector<GeneratorSet> all_subsets(int rank) {
  std::vector<GeneratorSet> out;
  for (std::uint32_t b = 0; b < (1u << rank); ++b) out.emplace_back(b);
  return out;
}

/// Coxeter matrix plus an optional type tag.
struct CoxeterSpec {
  int rank = 0;
  std::vector<std::vector<int>> matrix;
  std::string name;

  int m(Generator s, Generator t) const { return matrix[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }

  void validate() const {
    if (rank <= 0) throw Error(ErrorKind::InvalidMatrix, "rank must be positive");
    if (rank > 31) throw Error(ErrorKind::InvalidMatrix, "rank above 31 is unsupported");
    if (static_cast<int>(matrix.size()) != rank) throw Error(ErrorKind::InvalidMatrix, "matrix has wrong row count");
    for (int s = 0; s < rank; ++s) {
      if (static_cast<int>(matrix[static_cast<std::size_t>(s)].size()) != rank)
        throw Error(ErrorKind::InvalidMatrix, "matrix row " + std::to_string(s + 1) + " has wrong length");
      for (int t = 0; t < rank; ++t) {
        if (m(s, t) != m(t, s)) throw Error(ErrorKind::InvalidMatrix, "matrix is not symmetric");
        if (s == t && m(s, t) != 1) throw Error(ErrorKind::InvalidMatrix, "diagonal entries must be 1");
        if (s != t && m(s, t) < 2) throw Error(ErrorKind::InvalidMatrix, "off-diagonal entries must be >= 2");
      }
    }
  }

  /// Stable 64-bit FNV-1a hash of the matrix, as 16 hex digits.
  std::string content_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&h](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
    };
    feed(std::to_string(rank) + ";");
    for (const auto& row : matrix)
      for (int v : row) feed(std::to_string(v) + ",");
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
  }

  static CoxeterSpec from_matrix(std::vector<std::vector<int>> matrix, std::string name = {}) {
    CoxeterSpec spec;
    spec.rank = static_cast<int>(matrix.size());
    spec.matrix = std::move(matrix);
    spec.name = std::move(name);
    spec.validate();
    return spec;
  }

  /// Plain text: rank n on the first line, then n rows of n integers.
  static CoxeterSpec parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n) || n <= 0) throw Error(ErrorKind::InvalidMatrix, "expected positive rank on first line");
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : m)
      for (auto& v : row)
        if (!(in >> v)) throw Error(ErrorKind::InvalidMatrix, "matrix file truncated");
    std::string extra;
    if (in >> extra) throw Error(ErrorKind::InvalidMatrix, "trailing data in matrix file");
    return from_matrix(std::move(m));
  }

  static CoxeterSpec load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open matrix file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str());
  }

  /// Named types: A<n>, B<n>, D<n>, E6-E8, F4, G2, H3, H4, I2(<m>).
  /// Numbering follows Bourbaki.
  static CoxeterSpec named(const std::string& tag) {
    static const std::regex series(R"(([ABDEFGH])(\d+))");
    static const std::regex dihedral(R"(I2\((\d+)\))");
    std::smatch match;
    auto chain = [](int n) {
      std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
      for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        if (i + 1 < n) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] =
            m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = 3;
      }
      return m;
    };
    auto set = [](std::vector<std::vector<int>>& m, int a, int b, int v) {
      m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
      m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
    };
    if (std::regex_match(tag, match, dihedral)) {
      const int m = std::stoi(match[1]);
      if (m < 2) throw Error(ErrorKind::InvalidMatrix, "I2(m) needs m >= 2");
      return from_matrix({{1, m}, {m, 1}}, tag);
    }
    if (!std::regex_match(tag, match, series)) throw Error(ErrorKind::InvalidArgument, "unknown Coxeter type " + tag);
    const char family = match[1].str()[0];
    const int n = std::stoi(match[2]);
    if (n < 1 || n > 31) throw Error(ErrorKind::InvalidArgument, "unsupported rank in " + tag);
    auto m = chain(n);
    switch (family) {
      case 'A':
        break;
      case 'B':
        if (n < 2) throw Error(ErrorKind::InvalidArgument, "B<n> needs n >= 2");
        set(m, n - 2, n - 1, 4);
        break;
      case 'D':
        if (n < 4) throw Error(ErrorKind::InvalidArgument, "D<n> needs n >= 4");
        set(m, n - 2, n - 1, 2);
        set(m, n - 3, n - 1, 3);
        break;
      case 'E':
        if (n < 6 || n > 8) throw Error(ErrorKind::InvalidArgument, "E<n> needs 6 <= n <= 8");
        // Bourbaki: 1-3-4-5-...-n chain with 2 attached to 4.
        m = std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        set(m, 0, 2, 3);
        set(m, 1, 3, 3);
        for (int i = 2; i + 1 < n; ++i) set(m, i, i + 1, 3);
        break;
      case 'F':
        if (n != 4) throw Error(ErrorKind::InvalidArgument, "only F4 exists");
        set(m, 1, 2, 4);
        break;
      case 'G':
        if (n != 2) throw Error(ErrorKind::InvalidArgument, "only G2 exists");
        set(m, 0, 1, 6);
        break;
      case 'H':
        if (n != 3 && n != 4) throw Error(ErrorKind::InvalidArgument, "only H3 and H4 exist");
        set(m, 0, 1, 5);
        break;
      default:
        throw Error(ErrorKind::InvalidArgument, "unknown Coxeter type " + tag);
    }
    return from_matrix(std::move(m), tag);
  }
};

class CoxeterGroup;

/// Handle to an element of a particular CoxeterGroup. Indices follow the
/// enumeration order (length, then ShortLex of the normal form).
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(const CoxeterGroup* group, std::uint32_t index) : group_(group), index_(index) {}

  const CoxeterGroup* group() const { return group_; }
  std::uint32_t index() const { return index_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group_ == b.group_ && a.index_ == b.index_;
  }
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) { return a.index_ <=> b.index_; }

 private:
  const CoxeterGroup* group_ = nullptr;
  std::uint32_t index_ = 0;
};

enum class Side { Left, Right };

using Word = std::vector<Generator>;

/// Immutable enumerated finite Coxeter group.
class CoxeterGroup {
 public:
  static constexpr std::uint32_t kDefaultCap = 50000;

  const CoxeterSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(length_.size()); }
  GeneratorSet all_generators() const { return GeneratorSet::full(rank()); }

  GroupElement element(std::uint32_t index) const { return GroupElement(this, index); }
  GroupElement identity() const { return element(0); }
  std::uint32_t generator_index(Generator s) const { return left_[static_cast<std::size_t>(s)][0]; }
  GroupElement generator(Generator s) const { return element(generator_index(s)); }
  std::uint32_t longest_index() const { return order() - 1; }

  int length(std::uint32_t w) const { return length_[w]; }
  int max_length() const { return length_.back(); }
  /// s*w
  std::uint32_t left_mul(Generator s, std::uint32_t w) const { return left_[static_cast<std::size_t>(s)][w]; }
  /// w*s
  std::uint32_t right_mul(std::uint32_t w, Generator s) const { return right_[static_cast<std::size_t>(s)][w]; }
  std::uint32_t inverse(std::uint32_t w) const { return inverse_[w]; }
  GeneratorSet left_descents(std::uint32_t w) const { return GeneratorSet(left_desc_[w]); }
  GeneratorSet right_descents(std::uint32_t w) const { return GeneratorSet(right_desc_[w]); }
  /// First letter of the ShortLex normal form (least left descent); -1 for e.
  Generator first_letter(std::uint32_t w) const { return first_letter_[w]; }
  /// (-1)^l(w)
  int sign(std::uint32_t w) const { return (length_[w] % 2 == 0) ? 1 : -1; }

  Word word(std::uint32_t w) const {
    Word out;
    while (w != 0) {
      const Generator s = first_letter_[w];
      out.push_back(s);
      w = left_mul(s, w);
    }
    return out;
  }

  /// "e" or "s1s2s1".
  std::string word_string(std::uint32_t w) const {
    if (w == 0) return "e";
    std::string out;
    for (Generator s : word(w)) out += "s" + std::to_string(s + 1);
    return out;
  }

  /// Product of the letters of `word` (need not be reduced).
  std::uint32_t from_word(const Word& letters) const {
    std::uint32_t x = 0;
    for (Generator s : letters) {
      if (s < 0 || s >= rank()) throw Error(ErrorKind::InvalidArgument, "generator out of range in word");
      x = right_mul(x, s);
    }
    return x;
  }

  std::uint32_t multiply(std::uint32_t g, std::uint32_t h) const {
    std::uint32_t x = g;
    for (Generator s : word(h)) x = right_mul(x, s);
    return x;
  }

  /// Bruhat order by the subword scan along the normal form of y.
  bool bruhat_leq(std::uint32_t x, std::uint32_t y) const {
    while (true) {
      if (length_[x] > length_[y]) return false;
      if (y == 0) return x == 0;
      if (length_[x] == length_[y]) return x == y;
      const Generator s = first_letter_[y];
      if (left_descents(x).contains(s)) x = left_mul(s, x);
      y = left_mul(s, y);
    }
  }

  /// x <=_L y: y = w*x with l(y) = l(w) + l(x).
  bool weak_left_leq(std::uint32_t x, std::uint32_t y) const {
    return length_[multiply(y, inverse_[x])] == length_[y] - length_[x];
  }

  std::uint32_t longest_index(GeneratorSet J) const {
    std::uint32_t w = 0;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Generator s : J.to_vector()) {
        if (!left_descents(w).contains(s)) {
          w = left_mul(s, w);
          grew = true;
        }
      }
    }
    return w;
  }

  /// Elements of W_J in index order.
  std::vector<std::uint32_t> parabolic_subgroup(GeneratorSet J) const {
    std::vector<char> seen(order(), 0);
    std::vector<std::uint32_t> out{0}, frontier{0};
    seen[0] = 1;
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t w : frontier)
        for (Generator s : J.to_vector()) {
          const std::uint32_t x = left_mul(s, w);
          if (!seen[x]) {
            seen[x] = 1;
            next.push_back(x);
            out.push_back(x);
          }
        }
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Number of elements of each length 0..l(w0).
  std::vector<std::uint64_t> length_counts() const {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_length() + 1), 0);
    for (int l : length_) ++counts[static_cast<std::size_t>(l)];
    return counts;
  }

  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

 private:
  friend std::shared_ptr<const CoxeterGroup> build_group(const CoxeterSpec& spec, std::uint32_t cap);
  CoxeterGroup() = default;

  void enumerate(std::uint32_t cap);
  void verify_relations() const;

  CoxeterSpec spec_;
  std::vector<int> length_;
  std::vector<std::vector<std::uint32_t>> left_;
  std::vector<std::vector<std::uint32_t>> right_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> left_desc_;
  std::vector<std::uint32_t> right_desc_;
  std::vector<Generator> first_letter_;
};

namespace detail {

// Quantized position of a chamber point; distinct elements sit at
// coordinate distance > 0.5, so a 1/64 grid never merges them.
struct GridKey {
  std::vector<long long> cells;
  friend bool operator==(const GridKey&, const GridKey&) = default;
};
struct GridKeyHash {
  std::size_t operator()(const GridKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (long long c : k.cells) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};
constexpr double kGrid = 64.0;

inline GridKey grid_key(const std::vector<double>& v) {
  GridKey k;
  k.cells.reserve(v.size());
  for (double x : v) k.cells.push_back(std::llround(x * kGrid));
  return k;
}

// Keys reachable by rounding ambiguous coordinates the other way.
inline std::vector<GridKey> alternate_keys(const std::vector<double>& v) {
  std::vector<GridKey> keys{grid_key(v)};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double scaled = v[i] * kGrid;
    const double frac = scaled - std::floor(scaled);
    if (std::abs(frac - 0.5) > 1e-6) continue;
    const long long other = (std::llround(scaled) == static_cast<long long>(std::floor(scaled)))
                                ? static_cast<long long>(std::floor(scaled)) + 1
                                : static_cast<long long>(std::floor(scaled));
    const std::size_t n = keys.size();
    for (std::size_t j = 0; j < n; ++j) {
      GridKey k = keys[j];
      k.cells[i] = other;
      keys.push_back(std::move(k));
    }
  }
  return keys;
}

}  // namespace detail

inline void CoxeterGroup::enumerate(std::uint32_t cap) {
  const int n = rank();
  const auto un = static_cast<std::size_t>(n);
  // Bilinear form B(a_s, a_t) = -cos(pi / m(s,t)).
  std::vector<std::vector<double>> B(un, std::vector<double>(un));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      B[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = -std::cos(std::numbers::pi / spec_.m(s, t));

  // Finite iff B is positive definite (Cholesky succeeds).
  {
    std::vector<std::vector<double>> L(un, std::vector<double>(un, 0.0));
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double sum = B[i][j];
        for (std::size_t k = 0; k < j; ++k) sum -= L[i][k] * L[j][k];
        if (i == j) {
          if (sum <= 1e-12) throw Error(ErrorKind::InfiniteOrTooLarge, "Coxeter group is infinite");
          L[i][i] = std::sqrt(sum);
        } else {
          L[i][j] = sum / L[j][j];
        }
      }
  }

  // Base point v0 with B(a_s, v0) = 1 for all s (Gaussian elimination).
  std::vector<double> v0(un, 1.0);
  {
    auto A = B;
    for (std::size_t col = 0; col < un; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < un; ++r)
        if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
      std::swap(A[col], A[piv]);
      std::swap(v0[col], v0[piv]);
      for (std::size_t r = 0; r < un; ++r) {
        if (r == col) continue;
        const double f = A[r][col] / A[col][col];
        for (std::size_t c = col; c < un; ++c) A[r][c] -= f * A[col][c];
        v0[r] -= f * v0[col];
      }
    }
    for (std::size_t i = 0; i < un; ++i) v0[i] /= A[i][i];
  }

  auto pairing = [&](Generator s, const std::vector<double>& v) {
    double sum = 0;
    for (std::size_t t = 0; t < un; ++t) sum += B[static_cast<std::size_t>(s)][t] * v[t];
    return sum;
  };
  auto reflect = [&](Generator s, std::vector<double> v) {
    v[static_cast<std::size_t>(s)] -= 2.0 * pairing(s, v);
    return v;
  };
  auto descents_of = [&](const std::vector<double>& v) {
    std::uint32_t d = 0;
    for (Generator s = 0; s < n; ++s)
      if (pairing(s, v) < 0) d |= (1u << s);
    return d;
  };

  std::vector<std::vector<double>> points{v0};
  length_ = {0};
  left_desc_ = {0};
  first_letter_ = {-1};
  std::vector<std::uint32_t> parent{0};

  std::unordered_map<detail::GridKey, std::uint32_t, detail::GridKeyHash> index_of;
  index_of.emplace(detail::grid_key(v0), 0);
  auto lookup = [&](const std::vector<double>& v) -> std::optional<std::uint32_t> {
    for (const auto& k : detail::alternate_keys(v)) {
      auto it = index_of.find(k);
      if (it != index_of.end()) return it->second;
    }
    return std::nullopt;
  };

  std::uint32_t layer_begin = 0, layer_end = 1;
  int level = 0;
  while (layer_begin < layer_end) {
    struct Candidate {
      Generator first;
      std::uint32_t parent;
      std::vector<double> point;
      std::uint32_t desc;
    };
    std::vector<Candidate> fresh;
    std::unordered_map<detail::GridKey, std::size_t, detail::GridKeyHash> fresh_index;
    for (std::uint32_t w = layer_begin; w < layer_end; ++w) {
      for (Generator s = 0; s < n; ++s) {
        if ((left_desc_[w] >> s) & 1u) continue;
        auto p = reflect(s, points[w]);
        bool known = false;
        for (const auto& k : detail::alternate_keys(p))
          if (fresh_index.count(k)) known = true;
        if (known) continue;
        const std::uint32_t desc = descents_of(p);
        const Generator first = static_cast<Generator>(std::countr_zero(desc));
        const auto par = lookup(reflect(first, p));
        if (!par || *par < layer_begin || *par >= layer_end)
          throw Error(ErrorKind::Internal, "enumeration lost track of a parent element");
        fresh_index.emplace(detail::grid_key(p), fresh.size());
        fresh.push_back({first, *par, std::move(p), desc});
      }
    }
    if (points.size() + fresh.size() > cap)
      throw Error(ErrorKind::InfiniteOrTooLarge, "group order exceeds cap " + std::to_string(cap));
    std::sort(fresh.begin(), fresh.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(a.first, a.parent) < std::tie(b.first, b.parent);
    });
    ++level;
    layer_begin = layer_end;
    for (auto& c : fresh) {
      const auto idx = static_cast<std::uint32_t>(points.size());
      index_of.emplace(detail::grid_key(c.point), idx);
      points.push_back(std::move(c.point));
      length_.push_back(level);
      left_desc_.push_back(c.desc);
      first_letter_.push_back(c.first);
      parent.push_back(c.parent);
    }
    layer_end = static_cast<std::uint32_t>(points.size());
  }

  const std::uint32_t N = static_cast<std::uint32_t>(points.size());
  left_.assign(un, std::vector<std::uint32_t>(N));
  for (std::uint32_t w = 0; w < N; ++w)
    for (Generator s = 0; s < n; ++s) {
      const auto x = lookup(reflect(s, points[w]));
      if (!x) throw Error(ErrorKind::Internal, "left action left the enumerated set");
      left_[static_cast<std::size_t>(s)][w] = *x;
    }

  right_.assign(un, std::vector<std::uint32_t>(N));
  inverse_.assign(N, 0);
  right_desc_.assign(N, 0);
  for (std::uint32_t w = 0; w < N; ++w) {
    for (Generator s = 0; s < n; ++s) {
      std::uint32_t ws;
      if (w == 0) {
        ws = left_[static_cast<std::size_t>(s)][0];
      } else {
        const Generator t = first_letter_[w];
        ws = left_[static_cast<std::size_t>(t)][right_[static_cast<std::size_t>(s)][left_[static_cast<std::size_t>(t)][w]]];
      }
      right_[static_cast<std::size_t>(s)][w] = ws;
      if (length_[ws] < length_[w]) right_desc_[w] |= (1u << s);
    }
  }
  for (std::uint32_t w = 1; w < N; ++w) {
    const Generator t = first_letter_[w];
    inverse_[w] = right_[static_cast<std::size_t>(t)][inverse_[left_[static_cast<std::size_t>(t)][w]]];
  }
}

inline void CoxeterGroup::verify_relations() const {
  const std::uint32_t N = order();
  const int n = rank();
  for (Generator s = 0; s < n; ++s)
    for (std::uint32_t w = 0; w < N; ++w) {
      const std::uint32_t sw = left_mul(s, w);
      if (sw == w || left_mul(s, sw) != w) throw Error(ErrorKind::Internal, "generator action is not a free involution");
      if (std::abs(length_[sw] - length_[w]) != 1) throw Error(ErrorKind::Internal, "length parity violated");
    }
  for (Generator s = 0; s < n; ++s)
    for (Generator t = s + 1; t < n; ++t) {
      const int m = spec_.m(s, t);
      for (std::uint32_t w = 0; w < N; ++w) {
        std::uint32_t x = w;
        for (int k = 0; k < m; ++k) x = left_mul(s, left_mul(t, x));
        if (x != w) throw Error(ErrorKind::Internal, "braid relation fails on enumerated tables");
      }
    }
}

/// Enumerates W by ShortLex breadth-first search from the identity.
inline std::shared_ptr<const CoxeterGroup> build_group(const CoxeterSpec& spec,
                                                       std::uint32_t cap = CoxeterGroup::kDefaultCap) {
  spec.validate();
  if (cap == 0) throw Error(ErrorKind::InvalidArgument, "cap must be positive");
  std::shared_ptr<CoxeterGroup> g(new CoxeterGroup());
  g->spec_ = spec;
  g->enumerate(cap);
  g->verify_relations();
  return g;
}

inline std::shared_ptr<const CoxeterGroup> build_group(const std::string& named,
                                                       std::uint32_t cap = CoxeterGroup::kDefaultCap) {
  return build_group(CoxeterSpec::named(named), cap);
}

// Element-level operations.

inline void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.group() == nullptr || a.group() != b.group())
    throw Error(ErrorKind::MixedGroups, "elements belong to different groups");
}

inline GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_group(g, h);
  return g.group()->element(g.group()->multiply(g.index(), h.index()));
}

inline int length(const GroupElement& g) { return g.group()->length(g.index()); }

inline GroupElement inverse(const GroupElement& g) { return g.group()->element(g.group()->inverse(g.index())); }

inline GeneratorSet descents(const GroupElement& g, Side side) {
  return side == Side::Left ? g.group()->left_descents(g.index()) : g.group()->right_descents(g.index());
}

inline bool bruhat_leq(const GroupElement& x, const GroupElement& y) {
  require_same_group(x, y);
  return x.group()->bruhat_leq(x.index(), y.index());
}

inline bool weak_left_leq(const GroupElement& x, const GroupElement& y) {
  require_same_group(x, y);
  return x.group()->weak_left_leq(x.index(), y.index());
}

inline GroupElement longest_element(const CoxeterGroup& group, GeneratorSet J) {
  if (!J.is_subset_of(group.all_generators())) throw Error(ErrorKind::InvalidArgument, "J is not a subset of S");
  return group.element(group.longest_index(J));
}

inline Word word(const GroupElement& g) { return g.group()->word(g.index()); }

}  // namespace klspecht
