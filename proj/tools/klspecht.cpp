// klspecht: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "klspecht.hpp"

namespace ks = klspecht;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string type;
  std::string matrix_file;
  std::vector<int> J;
  std::string partition;
  int n = 0;
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  std::string level = "fast";
  std::uint32_t max_order = ks::CoxeterGroup::kDefaultCap;
  std::uint32_t rank_cap = 200;
  int murphy_cap = 5;
  std::uint64_t seed = ks::VerifyOptions{}.seed;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::shared_ptr<const ks::CoxeterGroup> load_group(const Config& c) {
  if (c.type.empty() == c.matrix_file.empty()) throw UsageError("give exactly one of --type or --matrix");
  const ks::CoxeterSpec spec = c.type.empty() ? ks::CoxeterSpec::load_matrix_file(c.matrix_file) : ks::CoxeterSpec::named(c.type);
  return ks::build_group(spec, c.max_order);
}

ks::GeneratorSet parse_j(const Config& c, int rank) {
  ks::GeneratorSet J;
  for (int s : c.J) {
    if (s < 1 || s > rank) throw UsageError("--j: generator " + std::to_string(s) + " outside 1.." + std::to_string(rank));
    J.insert(s - 1);
  }
  return J;
}

ks::Partition parse_partition(const Config& c) {
  if (c.partition.empty()) throw UsageError("--partition is required");
  try {
    return ks::Partition::parse(c.partition);
  } catch (const ks::Error& e) {
    throw UsageError(std::string("--partition: ") + e.what());
  }
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw UsageError("--format " + c.format + " is not supported by this subcommand");
}

std::string laurent_text(const ks::LaurentInt& a) { return a.to_string(); }

std::string matrix_text(const ks::LaurentMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "\t" : "  ") << laurent_text(m(i, j));
    os << "\n";
  }
  return os.str();
}

std::string tableau_list_text(const std::vector<ks::StandardTableau>& ts) {
  std::ostringstream os;
  for (std::size_t k = 0; k < ts.size(); ++k) os << "  " << k << ": " << ts[k].to_string() << "\n";
  return os.str();
}

std::string cmd_group(const Config& c) {
  require_format(c, {"text", "json"});
  const auto g = load_group(c);
  const ks::Json j = ks::group_json(*g);
  if (c.format == "json") return ks::dump(j);
  std::ostringstream os;
  os << "order " << g->order() << "\n";
  os << "length generating function";
  bool first = true;
  const auto counts = j["lengthCounts"].get<std::vector<std::uint64_t>>();
  for (std::size_t k = 0; k < counts.size(); ++k) {
    os << (first ? " " : " + ");
    if (k == 0 || counts[k] != 1) os << counts[k];
    if (k > 0) os << "q" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  os << "\nlongest element " << g->word_string(g->order() - 1) << "\n";
  return os.str();
}

std::string cmd_klpoly(const Config& c) {
  require_format(c, {"text", "json"});
  const auto g = load_group(c);
  const ks::KLTable kl = ks::load_or_build_kl(g, ks::resolve_cache_dir(c.cache_dir));
  const ks::Json j = ks::kl_json(kl);
  if (c.format == "json") return ks::dump(j);
  std::ostringstream os;
  for (const auto& e : j["entries"])
    os << "p(" << e["y"].get<std::string>() << ", " << e["w"].get<std::string>()
       << ") = " << laurent_text(ks::laurent_from_json(e["p"])) << "  mu=" << e["mu"].get<int>() << "\n";
  return os.str();
}

std::string cmd_ej(const Config& c) {
  require_format(c, {"text", "json"});
  const auto g = load_group(c);
  const auto sys = ks::build_parabolic(g, parse_j(c, g->rank()));
  const ks::Json j = ks::parabolic_json(*sys);
  if (c.format == "json") return ks::dump(j);
  std::ostringstream os;
  auto list = [&os](const char* name, const ks::Json& words) {
    os << name << " (" << words.size() << "):";
    for (const auto& w : words) os << " " << w.get<std::string>();
    os << "\n";
  };
  os << "J = {" << sys->J().to_string() << "}  w_J = " << g->word_string(sys->wJ()) << "\n";
  list("D_J", j["DJ"]);
  list("D̄_J", j["DJbar"]);
  list("E_J", j["EJ"]);
  for (const auto& row : j["classification"]) {
    os << "  s" << row["s"].get<int>() << " " << row["x"].get<std::string>() << ": " << row["class"].get<std::string>();
    if (row.contains("image")) os << " -> " << row["image"].get<std::string>();
    if (row.contains("witness")) os << " (t = s" << row["witness"].get<int>() << ")";
    os << "\n";
  }
  return os.str();
}

std::string cmd_wgraph(const Config& c) {
  require_format(c, {"text", "json", "dot"});
  const auto g = load_group(c);
  const auto sys = ks::build_parabolic(g, parse_j(c, g->rank()));
  const ks::WGraphDatum w = ks::build_wgraph(ks::relative_kl(ks::build_specht_module(sys)));
  if (c.format == "json") return ks::dump(ks::wgraph_json(w));
  if (c.format == "dot") return ks::wgraph_dot(w);
  std::ostringstream os;
  os << "J = {" << w.J().to_string() << "}, " << w.size() << " vertices, " << w.edges().size() << " edges\n";
  for (std::size_t i = 0; i < w.size(); ++i)
    os << "  " << i << ": " << w.label(i) << " {" << w.vertex(i).descents.to_string() << "}\n";
  for (const auto& [key, mu] : w.edges()) os << "  " << key.first << " -- " << key.second << "  mu=" << mu << "\n";
  const ks::CellPartition cells = ks::kl_cells(w);
  os << "cells:";
  for (const auto& cell : cells.cells) {
    os << " [";
    for (std::size_t k = 0; k < cell.size(); ++k) os << (k ? "," : "") << cell[k];
    os << "]";
  }
  os << "\n";
  return os.str();
}

std::string cmd_cells(const Config& c) {
  require_format(c, {"text", "json"});
  const auto g = load_group(c);
  const ks::KLTable kl = ks::load_or_build_kl(g, ks::resolve_cache_dir(c.cache_dir));
  const auto cells = ks::full_group_cells(kl);
  ks::Json arr = ks::Json::array();
  for (const auto& cell : cells) {
    ks::Json words = ks::words_json(*g, cell);
    arr.push_back({{"rightDescents", ks::to_json(g->right_descents(cell.front()))}, {"elements", std::move(words)}});
  }
  if (c.format == "json") return ks::dump({{"group", g->spec().name}, {"cellCount", cells.size()}, {"cells", arr}});
  std::ostringstream os;
  os << cells.size() << " left cells\n";
  for (const auto& cell : arr) {
    os << "  {";
    bool first = true;
    for (const auto& s : cell["rightDescents"]) {
      os << (first ? "" : ",") << s.get<int>();
      first = false;
    }
    os << "}:";
    for (const auto& w : cell["elements"]) os << " " << w.get<std::string>();
    os << "\n";
  }
  return os.str();
}

ks::Json tableaux_json(const std::vector<ks::StandardTableau>& ts) {
  ks::Json out = ks::Json::array();
  for (const auto& t : ts) out.push_back(ks::tableau_json(t));
  return out;
}

std::string cmd_specht(const Config& c) {
  require_format(c, {"text", "json"});
  const ks::Partition lambda = parse_partition(c);
  const ks::TypeAContext ctx(lambda.n());
  const ks::ShapeData& sh = ctx.shape(lambda);
  ks::Json gens = ks::Json::array();
  std::ostringstream os;
  os << "S^(" << lambda.to_string() << "), dimension " << sh.tableaux.size() << "\n" << tableau_list_text(sh.tableaux);
  for (int i = 1; i < ctx.n(); ++i) {
    const ks::LaurentMatrix a = ks::specht_action_typea(ctx, lambda, i);
    gens.push_back({{"i", i}, {"matrix", ks::to_json(a)}});
    os << "T_" << i << ":\n" << matrix_text(a);
  }
  if (c.format == "json")
    return ks::dump({{"lambda", lambda.parts}, {"tableaux", tableaux_json(sh.tableaux)}, {"action", std::move(gens)}});
  return os.str();
}

std::string cmd_murphy(const Config& c) {
  require_format(c, {"text", "json"});
  const int n = c.partition.empty() ? c.n : parse_partition(c).n();
  if (n < 2) throw UsageError("--n must be at least 2");
  const ks::TypeAContext ctx(n);
  const auto basis = ks::murphy_basis(ctx, c.murphy_cap);
  ks::LaurentSpan span(ctx.group().order());
  for (const auto& e : basis) span.insert(e.m);
  ks::Json shapes = ks::Json::array();
  for (const auto& sh : ctx.shapes())
    shapes.push_back({{"lambda", sh.lambda.parts}, {"tableaux", sh.tableaux.size()}});
  ks::Json elements = ks::Json::array();
  for (const auto& e : basis)
    elements.push_back({{"lambda", e.lambda.parts}, {"s", ks::tableau_json(e.s)}, {"t", ks::tableau_json(e.t)},
                        {"m", ks::to_json(e.m)}});
  if (c.format == "json")
    return ks::dump({{"n", n}, {"groupOrder", ctx.group().order()}, {"count", basis.size()}, {"rank", span.rank()},
                     {"shapes", std::move(shapes)}, {"elements", std::move(elements)}});
  std::ostringstream os;
  os << "n = " << n << ", " << basis.size() << " Murphy elements, rank " << span.rank() << " of " << ctx.group().order() << "\n";
  for (const auto& s : shapes)
    os << "  " << ks::Partition(s["lambda"].get<std::vector<int>>()).to_string() << ": " << s["tableaux"].get<std::size_t>()
       << " tableaux\n";
  return os.str();
}

std::string cmd_transition(const Config& c) {
  require_format(c, {"text", "json"});
  const ks::Partition lambda = parse_partition(c);
  const ks::TypeAContext ctx(lambda.n());
  const ks::ShapeData& sh = ctx.shape(lambda);
  const ks::TransitionData tr = ks::transition_matrices(ctx, lambda);
  const ks::WGraphDatum w = ks::wgraph_typea(ctx, lambda);
  if (c.format == "json")
    return ks::dump({{"lambda", lambda.parts}, {"tableaux", tableaux_json(sh.tableaux)}, {"C", ks::to_json(tr.C)},
                     {"Cinv", ks::to_json(tr.C_inv)}, {"p", ks::to_json(tr.p)}, {"wgraph", ks::wgraph_json(w)}});
  std::ostringstream os;
  os << "lambda = " << lambda.to_string() << "\n" << tableau_list_text(sh.tableaux);
  os << "C (columns: C_{d(s) w_J} in the m_t basis):\n" << matrix_text(tr.C);
  os << "p:\n" << matrix_text(tr.p);
  for (const auto& [key, mu] : w.edges()) os << "  mu(" << key.first << ", " << key.second << ") = " << mu << "\n";
  return os.str();
}

int cmd_verify(const Config& c, std::string& out) {
  require_format(c, {"text", "json"});
  ks::VerifyOptions opt;
  if (c.level == "off") opt.level = ks::VerifyLevel::Off;
  else if (c.level == "fast") opt.level = ks::VerifyLevel::Fast;
  else if (c.level == "full") opt.level = ks::VerifyLevel::Full;
  else throw UsageError("--level must be off, fast or full");
  opt.seed = c.seed;
  opt.rank_cap = c.rank_cap;
  const auto g = load_group(c);
  ks::VerifySummary summary;
  try {
    const ks::KLTable kl = ks::load_or_build_kl(g, ks::resolve_cache_dir(c.cache_dir));
    summary = ks::run_verification(g, kl, opt);
  } catch (const ks::Error& e) {
    ks::VerificationReport r;
    r.check(false, e.what());
    summary.suites.push_back({"setup", r});
  }
  if (c.format == "json") {
    ks::Json suites = ks::Json::array();
    for (const auto& s : summary.suites)
      suites.push_back({{"name", s.name}, {"ok", s.report.ok()}, {"passed", s.report.passed}, {"failures", s.report.failures}});
    ks::Json diags = ks::Json::array();
    for (const auto& d : summary.diagnostics)
      diags.push_back({{"name", d.name}, {"holds", d.holds}, {"total", d.total}, {"detail", d.detail}});
    out = ks::dump({{"group", g->spec().name}, {"level", c.level}, {"seed", c.seed}, {"ok", summary.ok()},
                    {"suites", std::move(suites)}, {"diagnostics", std::move(diags)}});
  } else {
    out = ks::summary_text(summary);
  }
  return summary.ok() ? kExitOk : kExitVerify;
}

std::string cmd_rankdiag(const Config& c) {
  require_format(c, {"text", "json"});
  const auto g = load_group(c);
  const ks::RankReport r = ks::cellular_rank_report(ks::CellularDatum(g), c.rank_cap);
  if (c.format == "json") return ks::dump(ks::rank_report_json(r));
  std::ostringstream os;
  os << "groupOrder " << r.group_order << "\nsumOfSquares " << r.sum_of_squares << "\nrank " << r.rank << "\n";
  for (const auto& [J, k] : r.per_layer) os << "  J={" << J.to_string() << "} |E_J|=" << k << "\n";
  os << "note: " << r.note << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig data, W-graphs and Specht modules of finite Coxeter groups"};
  app.require_subcommand(1);
  Config c;

  auto add_group = [&c](CLI::App* sub) {
    sub->add_option("--type", c.type, "Named Coxeter type, e.g. A3, B3, H3, I2(7)");
    sub->add_option("--matrix", c.matrix_file, "Coxeter matrix file: rank, then rows")->check(CLI::ExistingFile);
    sub->add_option("--max-order", c.max_order, "Cap on the group order")->check(CLI::PositiveNumber);
  };
  auto add_format = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("-o,--output", c.output, "Write output to a file instead of stdout");
  };
  auto add_cache = [&c](CLI::App* sub) {
    sub->add_option("--cache-dir", c.cache_dir, std::string("KL table cache directory (else $") + ks::kCacheDirEnv + ")");
  };
  auto add_j = [&c](CLI::App* sub) {
    sub->add_option("--j", c.J, "Subset J as 1-based generator indices, comma separated")->delimiter(',');
  };
  auto add_partition = [&c](CLI::App* sub) {
    sub->add_option("--partition", c.partition, "Partition as comma-separated parts, e.g. 2,1");
  };

  auto* group = app.add_subcommand("group", "Enumerate the group; order and length generating function");
  auto* klpoly = app.add_subcommand("klpoly", "Classical p_{y,w} table");
  auto* ej = app.add_subcommand("ej", "Parabolic system for J");
  auto* wgraph = app.add_subcommand("wgraph", "W-graph of the Specht module S^J");
  auto* cells = app.add_subcommand("cells", "Left cells of the whole group");
  auto* specht = app.add_subcommand("specht", "Type A: action matrices on S^lambda");
  auto* murphy = app.add_subcommand("murphy", "Type A: Murphy basis and its rank");
  auto* transition = app.add_subcommand("transition", "Type A: transition between Murphy and KL bases of S^lambda");
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  auto* rankdiag = app.add_subcommand("rankdiag", "Rank of the candidate cellular basis");

  for (auto* sub : {group, klpoly, ej, wgraph, cells, verify, rankdiag}) add_group(sub);
  for (auto* sub : {group, klpoly, ej, wgraph, cells, specht, murphy, transition, verify, rankdiag}) add_format(sub);
  for (auto* sub : {klpoly, cells, verify}) add_cache(sub);
  for (auto* sub : {ej, wgraph}) add_j(sub);
  for (auto* sub : {specht, transition, murphy}) add_partition(sub);
  murphy->add_option("--n", c.n, "Degree n of the symmetric group")->check(CLI::PositiveNumber);
  murphy->add_option("--cap", c.murphy_cap, "Largest n for the Murphy basis")->check(CLI::PositiveNumber);
  verify->add_option("--level", c.level, "Verification level")->check(CLI::IsMember({"off", "fast", "full"}));
  verify->add_option("--seed", c.seed, "Seed for randomized checks");
  for (auto* sub : {verify, rankdiag})
    sub->add_option("--rank-cap", c.rank_cap, "Largest group order for exact rank computations")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string out;
  int code = kExitOk;
  try {
    if (*group) out = cmd_group(c);
    else if (*klpoly) out = cmd_klpoly(c);
    else if (*ej) out = cmd_ej(c);
    else if (*wgraph) out = cmd_wgraph(c);
    else if (*cells) out = cmd_cells(c);
    else if (*specht) out = cmd_specht(c);
    else if (*murphy) out = cmd_murphy(c);
    else if (*transition) out = cmd_transition(c);
    else if (*verify) code = cmd_verify(c, out);
    else if (*rankdiag) out = cmd_rankdiag(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ks::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (c.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
      std::cerr << "error: --output: cannot write " << c.output << "\n";
      return kExitUsage;
    }
    f << out;
  }
  return code;
}
