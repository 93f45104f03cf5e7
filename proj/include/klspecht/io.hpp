#pragma once

// JSON and DOT serialization, and the on-disk KL table cache.
//
// Laurent polynomials are written as [[exponent, coefficient], ...] with
// ascending exponents. Coefficients that do not fit in 64 bits are written
// as decimal strings. Generator indices and descent sets are 1-based.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "klspecht/cellular.hpp"
#include "klspecht/typea.hpp"
#include "klspecht/wgraph.hpp"

namespace klspecht {

using Json = nlohmann::ordered_json;

inline constexpr int kKLCacheVersion = 1;
inline constexpr const char* kCacheDirEnv = "KLSPECHT_CACHE_DIR";

inline Json to_json(const BigInt& c) {
  if (c >= BigInt(INT64_MIN) && c <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(c);
  return c.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorKind::InvalidArgument, "coefficient must be an integer or a decimal string");
}

inline Json to_json(const LaurentInt& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_json(c)}));
  return out;
}

inline LaurentInt laurent_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "Laurent polynomial must be a list of pairs");
  LaurentInt out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw Error(ErrorKind::InvalidArgument, "Laurent term must be [exponent, coefficient]");
    out += LaurentInt::monomial(bigint_from_json(t[1]), t[0].get<int>());
  }
  return out;
}

inline Json to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(GeneratorSet J) {
  Json out = Json::array();
  for (Generator s : J.to_vector()) out.push_back(s + 1);
  return out;
}

/// Terms in ascending group index.
inline Json to_json(const HeckeVector& h) {
  Json out = Json::array();
  const CoxeterGroup& g = *h.group();
  for (const auto& [w, a] : h.coords()) out.push_back({{"word", g.word_string(w)}, {"coeff", to_json(a)}});
  return out;
}

inline Json words_json(const CoxeterGroup& g, const std::vector<std::uint32_t>& elements) {
  Json out = Json::array();
  for (std::uint32_t w : elements) out.push_back(g.word_string(w));
  return out;
}

inline Json group_json(const CoxeterGroup& g) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.max_length() + 1), 0);
  for (std::uint32_t w = 0; w < g.order(); ++w) ++counts[static_cast<std::size_t>(g.length(w))];
  return {{"type", g.spec().name},
          {"rank", g.rank()},
          {"matrix", g.spec().matrix},
          {"matrixHash", g.spec().content_hash()},
          {"order", g.order()},
          {"longestWord", g.word_string(g.order() - 1)},
          {"lengthCounts", counts}};
}

/// Nonzero p_{y,w}, y < w, ordered by w then y.
inline Json kl_json(const KLTable& kl) {
  const CoxeterGroup& g = kl.group();
  Json entries = Json::array();
  for (std::uint32_t w = 0; w < g.order(); ++w)
    for (const auto& [y, p] : kl.c(w).coords()) {
      if (y == w) continue;
      entries.push_back({{"y", g.word_string(y)}, {"w", g.word_string(w)}, {"p", to_json(p)}, {"mu", kl.mu(y, w)}});
    }
  return {{"group", g.spec().name}, {"order", g.order()}, {"entries", std::move(entries)}};
}

inline Json kl_cache_json(const KLTable& kl) {
  const CoxeterGroup& g = kl.group();
  Json columns = Json::array();
  for (std::uint32_t w = 0; w < g.order(); ++w) {
    Json col = Json::array();
    for (const auto& [y, p] : kl.c(w).coords()) col.push_back(Json::array({y, to_json(p)}));
    columns.push_back(std::move(col));
  }
  return {{"version", kKLCacheVersion},
          {"matrixHash", g.spec().content_hash()},
          {"order", g.order()},
          {"columns", std::move(columns)}};
}

/// Rebuilds a table from cache JSON; header mismatches raise CacheMismatch.
/// Contents are taken as stored; corruption is left for verification to find.
inline KLTable kl_from_cache_json(std::shared_ptr<const CoxeterGroup> group, const Json& j) {
  const CoxeterGroup& g = *group;
  if (!j.is_object() || j.value("version", -1) != kKLCacheVersion)
    throw Error(ErrorKind::CacheMismatch, "KL cache format version differs");
  if (j.value("matrixHash", std::string()) != g.spec().content_hash())
    throw Error(ErrorKind::CacheMismatch, "KL cache belongs to a different Coxeter matrix");
  if (j.value("order", 0u) != g.order() || !j.contains("columns") || j["columns"].size() != g.order())
    throw Error(ErrorKind::CacheMismatch, "KL cache size does not match group order");
  std::vector<HeckeVector> columns;
  for (const auto& col : j["columns"]) {
    HeckeVector h(&g);
    for (const auto& entry : col) {
      const auto y = entry.at(0).get<std::uint32_t>();
      if (y >= g.order()) throw Error(ErrorKind::CacheMismatch, "KL cache refers to an unknown element");
      h.add(y, laurent_from_json(entry.at(1)));
    }
    columns.push_back(std::move(h));
  }
  return KLTable(std::move(group), std::move(columns));
}

/// The flag value when set, else the environment override, else empty.
inline std::string resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* env = std::getenv(kCacheDirEnv);
  return env ? std::string(env) : std::string();
}

inline std::filesystem::path kl_cache_path(const std::string& dir, const CoxeterSpec& spec) {
  return std::filesystem::path(dir) / ("kl-" + spec.content_hash() + ".json");
}

inline void save_kl_cache(const std::string& dir, const KLTable& kl) {
  std::filesystem::create_directories(dir);
  std::ofstream out(kl_cache_path(dir, kl.group().spec()));
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write KL cache in " + dir);
  out << kl_cache_json(kl).dump() << "\n";
}

/// Reads the cached table when present, otherwise computes and stores it.
/// An empty dir disables caching.
inline KLTable load_or_build_kl(std::shared_ptr<const CoxeterGroup> group, const std::string& dir) {
  if (dir.empty()) return kl_basis(group);
  const auto path = kl_cache_path(dir, group->spec());
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::CacheMismatch, std::string("unreadable KL cache: ") + e.what());
    }
    return kl_from_cache_json(std::move(group), j);
  }
  KLTable kl = kl_basis(group);
  save_kl_cache(dir, kl);
  return kl;
}

inline Json parabolic_json(const ParabolicSystem& sys) {
  const CoxeterGroup& g = sys.group();
  Json classes = Json::array();
  for (Generator s = 0; s < g.rank(); ++s)
    for (std::uint32_t x : sys.EJ()) {
      const EJClassification& c = sys.ej_class(s, x);
      Json row = {{"s", s + 1}, {"x", g.word_string(x)}, {"class", to_string(c.cls)}};
      if (c.cls == EJClass::Minus || c.cls == EJClass::Plus) row["image"] = g.word_string(c.image);
      else row["witness"] = c.witness + 1;
      classes.push_back(std::move(row));
    }
  return {{"J", to_json(sys.J())},
          {"wJ", g.word_string(sys.wJ())},
          {"DJ", words_json(g, sys.DJ())},
          {"DJbar", words_json(g, sys.DJbar())},
          {"EJ", words_json(g, sys.EJ())},
          {"classification", std::move(classes)}};
}

inline Json cells_json(const CellPartition& p) {
  Json out = Json::array();
  for (const auto& c : p.cells) out.push_back(c);
  return out;
}

inline Json wgraph_json(const WGraphDatum& w) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i)
    vertices.push_back({{"word", w.label(i)}, {"descents", to_json(w.vertex(i).descents)}});
  Json edges = Json::array();
  for (const auto& [key, mu] : w.edges()) edges.push_back({{"a", key.first}, {"b", key.second}, {"mu", mu}});
  return {{"J", to_json(w.J())}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)},
          {"cells", cells_json(kl_cells(w))}};
}

inline std::string wgraph_dot(const WGraphDatum& w) {
  std::ostringstream os;
  os << "graph wgraph {\n";
  for (std::size_t i = 0; i < w.size(); ++i)
    os << "  v" << i << " [label=\"" << w.label(i) << "|" << w.vertex(i).descents.to_string() << "\"];\n";
  for (const auto& [key, mu] : w.edges())
    os << "  v" << key.first << " -- v" << key.second << " [label=\"" << mu << "\"];\n";
  os << "}\n";
  return os.str();
}

inline Json rank_report_json(const RankReport& r) {
  Json layers = Json::array();
  for (const auto& [J, n] : r.per_layer) layers.push_back({{"J", to_json(J)}, {"sizeEJ", n}});
  return {{"groupOrder", r.group_order},
          {"sumOfSquares", r.sum_of_squares},
          {"rank", r.rank},
          {"perLayer", std::move(layers)},
          {"note", r.note}};
}

inline Json tableau_json(const StandardTableau& t) { return t.rows; }

inline Json relative_kl_json(const RelativeKLTable& t) {
  const CoxeterGroup& g = *t.group;
  return {{"J", to_json(t.J)}, {"basis", words_json(g, t.basis)}, {"P", to_json(t.P)}, {"R", to_json(t.R)}};
}

/// Pretty form with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace klspecht
