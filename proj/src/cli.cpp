#include "chromagraph/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "chromagraph/budget.hpp"
#include "chromagraph/catalog.hpp"
#include "chromagraph/colouring.hpp"
#include "chromagraph/counterexample.hpp"
#include "chromagraph/decomposition.hpp"
#include "chromagraph/error.hpp"
#include "chromagraph/graph_io.hpp"
#include "chromagraph/induced.hpp"
#include "chromagraph/reconstruct.hpp"
#include "json.hpp"

namespace chromagraph {
namespace {

using nlohmann::json;

constexpr std::uint64_t kCliMaxColourings = 10'000'000;
constexpr std::uint64_t kCliMaxPartitions = 10'000'000;
constexpr std::int64_t kDefaultSweep = 6;

struct Options {
  // global
  unsigned threads = 0;
  std::uint64_t max_colourings = kCliMaxColourings;
  std::uint64_t max_partitions = kCliMaxPartitions;
  // shared
  std::string graph_path;
  std::string pattern_path;
  std::string input_path;
  std::string format = "edge-list";
  std::string out_path;
  unsigned k = 0;
  std::uint64_t seed = 0;
  // build
  std::string labels_path;
  std::optional<std::uint64_t> strip_seed;
  // poly
  bool monomial = false;
  bool check = false;
  std::optional<std::int64_t> sweep;
  std::string csv_path;
  // reconstruct
  std::optional<std::size_t> sample;
  bool full = false;
  // pair
  std::size_t m = 0;
  // catalog
  std::size_t max_edges = 0;
};

Budget make_budget(const Options& o) {
  Budget b;
  b.max_colourings = o.max_colourings;
  b.max_partitions = o.max_partitions;
  b.threads = resolve_threads(o.threads);
  return b;
}

json budget_json(const Budget& b) {
  return {{"max_colourings", b.max_colourings},
          {"max_partitions", b.max_partitions},
          {"max_subsets", b.max_subsets},
          {"threads", b.threads}};
}

json envelope(json config, json result) {
  return {{"version", std::string(kVersion)}, {"config", std::move(config)}, {"result", std::move(result)}};
}

void emit(const Options& o, std::string_view text, std::ostream& out) {
  if (o.out_path.empty()) out << text;
  else write_file(o.out_path, text);
}

void emit_json(const Options& o, const json& j, std::ostream& out) { emit(o, j.dump(2) + "\n", out); }

Graph load_graph(const std::string& path, const std::string& format) {
  return parse_graph(read_file(path), parse_format(format));
}

json graph_summary(const Graph& g) {
  return {{"name", describe(g)}, {"vertices", g.size()}, {"edges", g.edge_count()}};
}

void run_build(const Options& o, std::ostream& out) {
  const Budget budget = make_budget(o);
  const Graph g = load_graph(o.graph_path, o.format);
  const ColouringGraph cg = build_colouring_graph(g, o.k, budget);
  if (!o.strip_seed) {
    emit(o, to_edge_list(cg.topology()), out);
    if (!o.labels_path.empty()) write_file(o.labels_path, labels_json(cg).dump() + "\n");
    return;
  }
  const auto perm = seeded_permutation(cg.size(), *o.strip_seed);
  emit(o, to_edge_list(cg.topology().permuted(perm)), out);
  if (!o.labels_path.empty()) {
    json rows = json::array();
    std::vector<VertexId> inverse(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v) inverse[perm[v]] = static_cast<VertexId>(v);
    for (VertexId id : inverse) {
      auto c = cg.colouring(id);
      rows.push_back(std::vector<int>(c.begin(), c.end()));
    }
    json labels = {{"k", o.k}, {"n", g.size()}, {"strip_seed", *o.strip_seed}, {"colourings", rows}};
    write_file(o.labels_path, labels.dump() + "\n");
  }
}

void run_gcp(const Options& o, std::ostream& out) {
  const Budget budget = make_budget(o);
  const Graph g = load_graph(o.graph_path, o.format);
  const Graph h = load_graph(o.pattern_path, o.format);
  const ColouringGraph cg = build_colouring_graph(g, o.k, budget);
  json config = {{"command", "gcp"},   {"graph", o.graph_path}, {"pattern", o.pattern_path},
                 {"format", o.format}, {"k", o.k},              {"budget", budget_json(budget)}};
  json result = {{"graph", graph_summary(g)},
                 {"pattern", graph_summary(h)},
                 {"colouring_graph_vertices", cg.size()},
                 {"count", to_decimal(count_induced_copies(cg, h, budget))}};
  emit_json(o, envelope(std::move(config), std::move(result)), out);
}

void run_poly(const Options& o, std::ostream& out) {
  const Budget budget = make_budget(o);
  const Graph g = load_graph(o.graph_path, o.format);
  const Graph h = load_graph(o.pattern_path, o.format);
  const FFPoly p = generalised_chromatic_polynomial(g, h, budget);
  const std::int64_t sweep = o.sweep.value_or(kDefaultSweep);
  json config = {{"command", "poly"},     {"graph", o.graph_path},   {"pattern", o.pattern_path},
                 {"format", o.format},    {"monomial", o.monomial},  {"check", o.check},
                 {"sweep", sweep},        {"csv", o.csv_path},       {"budget", budget_json(budget)}};
  json result = {{"graph", graph_summary(g)},
                 {"pattern", graph_summary(h)},
                 {"method", h.is_connected() ? "partition" : "product-decomposition"},
                 {"polynomial", p.to_json()}};
  if (o.monomial) {
    json mono = json::array();
    for (const auto& c : p.to_monomial()) mono.push_back(to_decimal(c));
    result["monomial"] = std::move(mono);
  }
  json rows = json::array();
  bool all_equal = true;
  std::ostringstream csv;
  csv << (o.check ? "k,value,oracle\n" : "k,value\n");
  for (std::int64_t k = 0; k <= sweep; ++k) {
    const Integer value = p.eval(k);
    json row = {{"k", k}, {"value", to_decimal(value)}};
    csv << k << ',' << to_decimal(value);
    if (o.check) {
      const ColouringGraph cg = build_colouring_graph(g, static_cast<unsigned>(k), budget);
      const Integer oracle = count_induced_copies(cg, h, budget);
      row["oracle"] = to_decimal(oracle);
      row["equal"] = oracle == value;
      all_equal = all_equal && oracle == value;
      csv << ',' << to_decimal(oracle);
    }
    csv << '\n';
    rows.push_back(std::move(row));
  }
  if (!o.csv_path.empty()) write_file(o.csv_path, csv.str());
  else result["evaluations"] = std::move(rows);
  if (o.check) result["check_passed"] = all_equal;
  emit_json(o, envelope(std::move(config), std::move(result)), out);
}

void run_reconstruct(const Options& o, std::ostream& out) {
  const Budget budget = make_budget(o);
  const AbstractGraph ag = parse_abstract_graph(read_file(o.input_path));
  SampleSpec spec;
  spec.full = o.full;
  if (o.sample) spec.size = *o.sample;
  spec.seed = o.seed;
  const ReconstructionReport report = reconstruct(ag, o.k, spec, budget);
  json config = {{"command", "reconstruct"},
                 {"input", o.input_path},
                 {"k", o.k},
                 {"sample", spec.full ? json("full") : json(spec.size)},
                 {"seed", o.seed},
                 {"budget", budget_json(budget)}};
  emit_json(o, envelope(std::move(config), to_json(report)), out);
}

void run_pair(const Options& o, std::ostream& out) {
  const Budget budget = make_budget(o);
  const PairReport report = verify_pair(o.m, o.k, o.seed, budget);
  json config = {{"command", "pair"}, {"m", o.m}, {"k", o.k}, {"seed", o.seed}, {"budget", budget_json(budget)}};
  emit_json(o, envelope(std::move(config), to_json(report)), out);
}

void run_catalog(const Options& o, std::ostream& out) {
  const GraphFormat format = parse_format(o.format);
  json list = json::array();
  for (const Graph& g : enumerate_connected_graphs(o.max_edges)) {
    list.push_back({{"name", describe(g)},
                    {"vertices", g.size()},
                    {"edges", g.edge_count()},
                    {"code", canonical_form(g).hex()},
                    {"graph", serialize(g, format)}});
  }
  json config = {{"command", "catalog"}, {"max_edges", o.max_edges}, {"format", o.format}};
  emit_json(o, envelope(std::move(config), {{"patterns", std::move(list)}}), out);
}

void report_error(std::ostream& err, std::string_view kind, const std::string& detail) {
  err << json{{"kind", kind}, {"detail", detail}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Colouring graphs, generalised chromatic polynomials and reconstruction", "chromagraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));
  app.add_option("--threads", o.threads, "worker threads (default: CHROMAGRAPH_THREADS or all cores)");
  app.add_option("--max-colourings", o.max_colourings, "ceiling on enumerated colourings");
  app.add_option("--max-partitions", o.max_partitions, "ceiling on visited partition nodes");

  auto* build = app.add_subcommand("build", "write the colouring graph C_k(G) as an edge list");
  build->add_option("--graph", o.graph_path, "base graph file")->required();
  build->add_option("--format", o.format, "edge-list or graph6");
  build->add_option("--k", o.k, "palette size")->required();
  build->add_option("--labels", o.labels_path, "write the colouring of each vertex as JSON");
  build->add_option("--strip-seed", o.strip_seed, "renumber vertices by a seeded permutation");
  build->add_option("--out", o.out_path, "output path (default stdout)");

  auto* gcp = app.add_subcommand("gcp", "count induced copies of H in C_k(G) directly");
  gcp->add_option("--graph", o.graph_path)->required();
  gcp->add_option("--pattern", o.pattern_path)->required();
  gcp->add_option("--format", o.format);
  gcp->add_option("--k", o.k)->required();
  gcp->add_option("--out", o.out_path);

  auto* poly = app.add_subcommand("poly", "generalised chromatic polynomial of (G, H)");
  poly->add_option("--graph", o.graph_path)->required();
  poly->add_option("--pattern", o.pattern_path)->required();
  poly->add_option("--format", o.format);
  poly->add_flag("--monomial", o.monomial, "also print coefficients of 1, k, k^2, ...");
  poly->add_flag("--check", o.check, "compare every evaluation with a direct count");
  poly->add_option("--sweep", o.sweep, "evaluate at k = 0..KMAX (default 6)");
  poly->add_option("--csv", o.csv_path, "write the evaluations as CSV");
  poly->add_option("--out", o.out_path);

  auto* rec = app.add_subcommand("reconstruct", "recover G from an unlabelled colouring graph");
  rec->add_option("--input", o.input_path, "colouring graph edge list")->required();
  rec->add_option("--k", o.k)->required();
  auto* sample_opt = rec->add_option("--sample", o.sample, "number of sampled vertices (default 200)");
  auto* full_opt = rec->add_flag("--full", o.full, "use every vertex");
  sample_opt->excludes(full_opt);
  rec->add_option("--seed", o.seed);
  rec->add_option("--out", o.out_path);

  auto* pair = app.add_subcommand("pair", "build and verify the indistinguishable pair");
  pair->add_option("--m", o.m, "edge bound on the patterns")->required();
  pair->add_option("--k", o.k)->required();
  pair->add_option("--seed", o.seed);
  pair->add_option("--out", o.out_path);

  auto* catalog = app.add_subcommand("catalog", "connected graphs with few edges");
  catalog->add_option("--max-edges", o.max_edges)->required();
  catalog->add_option("--format", o.format);
  catalog->add_option("--out", o.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, to_string(ErrorKind::InvalidArgument), e.what());
    return 1;
  }

  if (app.get_option("--threads")->count() == 0) {
    if (const char* env = std::getenv("CHROMAGRAPH_THREADS")) {
      try {
        o.threads = static_cast<unsigned>(std::stoul(env));
      } catch (const std::exception&) {
        report_error(err, to_string(ErrorKind::InvalidArgument), "CHROMAGRAPH_THREADS must be a number");
        return 1;
      }
    }
  }

  try {
    if (build->parsed()) run_build(o, out);
    else if (gcp->parsed()) run_gcp(o, out);
    else if (poly->parsed()) run_poly(o, out);
    else if (rec->parsed()) run_reconstruct(o, out);
    else if (pair->parsed()) run_pair(o, out);
    else if (catalog->parsed()) run_catalog(o, out);
  } catch (const Error& e) {
    report_error(err, e.kind_name(), e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(err, to_string(ErrorKind::Internal), e.what());
    return 1;
  }
  return 0;
}

}  // namespace chromagraph
