#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "chromagraph/catalog.hpp"
#include "chromagraph/cli.hpp"
#include "chromagraph/colouring.hpp"
#include "chromagraph/graph_io.hpp"
#include "chromagraph/induced.hpp"
#include "json.hpp"

using namespace chromagraph;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("chromagraph-cli-" + std::to_string(counter_++) + "-" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& contents) const {
    const auto path = (dir_ / name).string();
    write_file(path, contents);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

}  // namespace

TEST_CASE("poly of (P3, K1) is k(k-1)^2") {
  Scratch s;
  const auto p3 = s.file("p3.el", to_edge_list(path_graph(3)));
  const auto k1 = s.file("k1.el", to_edge_list(complete_graph(1)));
  const Run r = run({"poly", "--graph", p3, "--pattern", k1, "--monomial", "--check"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["version"] == kVersion);
  CHECK(j["config"]["command"] == "poly");
  CHECK(j["result"]["monomial"] == nlohmann::json::array({"0", "1", "-2", "1"}));
  CHECK(j["result"]["method"] == "partition");
  CHECK(j["result"]["check_passed"] == true);
  for (const auto& e : j["result"]["evaluations"]) {
    const long long k = e["k"].get<long long>();
    CHECK(e["value"] == std::to_string(k * (k - 1) * (k - 1)));
  }
}

TEST_CASE("poly uses the product decomposition for disconnected patterns") {
  Scratch s;
  const auto k2 = s.file("k2.el", to_edge_list(complete_graph(2)));
  const auto two = s.file("2k1.el", to_edge_list(empty_graph(2)));
  const auto csv = s.path("sweep.csv");
  const Run r = run({"poly", "--graph", k2, "--pattern", two, "--check", "--sweep", "4", "--csv", csv});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["method"] == "product-decomposition");
  CHECK(j["result"]["check_passed"] == true);
  // The sweep goes to the CSV file instead of the report.
  CHECK_FALSE(j["result"].contains("evaluations"));
  const std::string table = read_file(csv);
  CHECK(table.rfind("k,value,oracle\n", 0) == 0);
  CHECK(table.find("3,9,9\n") != std::string::npos);
}

TEST_CASE("build writes the colouring graph") {
  Scratch s;
  const auto k1 = s.file("k1.el", to_edge_list(complete_graph(1)));
  const Run r = run({"build", "--graph", k1, "--k", "3"});
  REQUIRE(r.code == 0);
  const Graph g = parse_graph(r.out);
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 3);

  const auto labels = s.path("labels.json");
  const auto out = s.path("c.el");
  const auto p3 = s.file("p3.el", to_edge_list(path_graph(3)));
  REQUIRE(run({"build", "--graph", p3, "--k", "3", "--labels", labels, "--strip-seed", "4", "--out", out}).code == 0);
  const AbstractGraph ag = parse_abstract_graph(read_file(out));
  CHECK(ag.size() == 12);
  const auto j = nlohmann::json::parse(read_file(labels));
  CHECK(j["colourings"].size() == 12);
  CHECK(j["k"] == 3);
}

TEST_CASE("gcp counts directly") {
  Scratch s;
  const auto p3 = s.file("p3.el", to_edge_list(path_graph(3)));
  const auto c4 = s.file("c4.el", to_edge_list(cycle_graph(4)));
  const Run r = run({"gcp", "--graph", p3, "--pattern", c4, "--k", "4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto cg = build_colouring_graph(path_graph(3), 4);
  CHECK(j["result"]["count"] == to_decimal(count_induced_copies(cg, cycle_graph(4))));
}

TEST_CASE("reconstruct from a file") {
  Scratch s;
  const auto cg = build_colouring_graph(path_graph(3), 28);
  const auto in = s.file("c.el", to_edge_list(strip_labels(cg, 3)));
  const Run r = run({"reconstruct", "--input", in, "--k", "28", "--sample", "60", "--seed", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["majority_graph"]["name"] == "P3");
  CHECK(j["result"]["degree_sequence"] == nlohmann::json::array({1, 1, 2}));
  CHECK(j["result"]["sample"]["seed"] == 2);
  CHECK(j["config"]["seed"] == 2);
  CHECK(run({"reconstruct", "--input", in, "--k", "28", "--sample", "60", "--seed", "2"}).out == r.out);
  CHECK(run({"reconstruct", "--input", in, "--k", "28", "--sample", "5", "--full"}).code == 1);
}

TEST_CASE("pair and catalog") {
  const Run r = run({"pair", "--m", "1", "--k", "3", "--seed", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["pass"] == true);
  CHECK(j["result"]["isomorphic"] == false);
  CHECK(run({"pair", "--m", "1", "--k", "3", "--seed", "1"}).out == r.out);

  const Run c = run({"catalog", "--max-edges", "2"});
  REQUIRE(c.code == 0);
  const auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["result"]["patterns"].size() == 3);
}

TEST_CASE("failures are structured JSON with exit code 1") {
  Scratch s;
  const auto bad = s.file("bad.el", "3 1\n0 7\n");
  Run r = run({"build", "--graph", bad, "--k", "3"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.err);
  CHECK(j["kind"] == "parse_error");
  CHECK(j["detail"].get<std::string>().find("line 2") != std::string::npos);

  const auto p3 = s.file("p3.el", to_edge_list(path_graph(3)));
  r = run({"--max-colourings", "5", "build", "--graph", p3, "--k", "3"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.err)["kind"] == "budget_exceeded");

  r = run({"frobnicate"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.err)["kind"] == "invalid_argument");

  r = run({"build", "--graph", s.path("missing.el"), "--k", "3"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.err).contains("kind"));

  r = run({"--version"});
  CHECK(r.code == 0);
  CHECK(r.out.find(kVersion) != std::string::npos);
}
