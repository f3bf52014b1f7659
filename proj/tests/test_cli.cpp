#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "divgraph/cli.hpp"

namespace cli = divgraph::cli;
using divgraph::OutputConfig;
using divgraph::OutputFormat;

namespace {

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> comments;
};

// Minimal parser for the tables this project emits: no embedded separators.
Csv parse_csv(const std::string& text) {
  Csv csv;
  std::stringstream stream(text);
  std::string line;
  bool first = true;
  while (std::getline(stream, line)) {
    if (!line.empty() && line[0] == '#') {
      csv.comments.push_back(line);
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream fs(line);
    std::string field;
    while (std::getline(fs, field, ',')) fields.push_back(field);
    if (line.empty() || line.back() == ',') fields.push_back("");
    if (first) {
      csv.header = fields;
      first = false;
    } else {
      csv.rows.push_back(fields);
    }
  }
  return csv;
}

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("vertex range parsing") {
  auto single = cli::parse_vertex_range("5");
  CHECK(single.lo == 5);
  CHECK(single.hi == 5);
  auto range = cli::parse_vertex_range("2..7");
  CHECK(range.lo == 2);
  CHECK(range.hi == 7);
  CHECK_THROWS_AS(cli::parse_vertex_range("7..2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_vertex_range("abc"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_vertex_range("3..x"), std::invalid_argument);
}

TEST_CASE("measure list parsing") {
  auto sel = cli::parse_measures("degree,clustering");
  CHECK(sel.degree);
  CHECK(sel.clustering);
  CHECK_FALSE(sel.betweenness);
  CHECK(cli::parse_measures("mean-geodesic").mean_geodesic);  // hyphen alias
  CHECK_THROWS_AS(cli::parse_measures("degree,bogus"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_measures(""), std::invalid_argument);
}

TEST_CASE("sweep parsing") {
  CHECK(cli::parse_sweep("100:1000:10") == std::vector<std::int64_t>{100, 1000});
  CHECK(cli::parse_sweep("2:20:2") == std::vector<std::int64_t>{2, 4, 8, 16, 20});
  CHECK_THROWS_AS(cli::parse_sweep("10:5:2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_sweep("2:10:1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_sweep("2:10"), std::invalid_argument);
}

TEST_CASE("measure command: known fixtures") {
  auto r = run_cli({"measure", "--n-max", "10", "--vertices", "6", "--measures", "clustering"});
  CHECK(r.status == 0);
  Csv csv = parse_csv(r.out);
  CHECK(csv.header == std::vector<std::string>{"n", "clustering", "clustering_decimal", "error"});
  REQUIRE(csv.rows.size() == 1);
  CHECK(csv.rows[0][0] == "6");
  CHECK(csv.rows[0][1] == "2/3");
  CHECK(csv.rows[0][2] == "0.666666666667");
  CHECK(csv.rows[0][3] == "");

  auto pair = run_cli({"measure", "--n-max", "100", "--vertices", "82..83",
                       "--measures", "clustering"});
  CHECK(pair.status == 0);
  Csv pair_csv = parse_csv(pair.out);
  REQUIRE(pair_csv.rows.size() == 2);
  CHECK(pair_csv.rows[0][1] == "2/3");
  CHECK(pair_csv.rows[1][1] == "0");

  auto degrees = run_cli({"measure", "--n-max", "4", "--vertices", "1..4",
                          "--measures", "degree"});
  CHECK(degrees.status == 0);
  Csv deg_csv = parse_csv(degrees.out);
  REQUIRE(deg_csv.rows.size() == 4);
  CHECK(deg_csv.rows[0][1] == "3");
  CHECK(deg_csv.rows[1][1] == "2");
  CHECK(deg_csv.rows[2][1] == "1");
  CHECK(deg_csv.rows[3][1] == "2");
}

TEST_CASE("measure command: normalized betweenness") {
  auto raw = run_cli({"measure", "--n-max", "10", "--vertices", "2",
                      "--measures", "betweenness"});
  auto norm = run_cli({"measure", "--n-max", "10", "--vertices", "2",
                       "--measures", "betweenness", "--normalized"});
  REQUIRE(raw.status == 0);
  REQUIRE(norm.status == 0);
  double x = std::stod(parse_csv(raw.out).rows[0][1]);
  double xp = std::stod(parse_csv(norm.out).rows[0][1]);
  CHECK(x == doctest::Approx(2.5));
  CHECK(xp == doctest::Approx(2.5 / (9.0 * 8.0)));
}

TEST_CASE("measure command: usage errors") {
  CHECK(run_cli({"measure", "--n-max", "10"}).status == 2);  // missing --measures
  CHECK(run_cli({"measure", "--n-max", "10", "--measures", "bogus"}).status == 2);
  CHECK(run_cli({"measure", "--n-max", "10", "--vertices", "5..20",
                 "--measures", "degree"}).status == 2);
  CHECK(run_cli({"measure", "--n-max", "1", "--measures", "degree"}).status == 2);
  CHECK(run_cli({"bogus-subcommand"}).status == 2);
  CHECK(run_cli({}).status == 2);
}

TEST_CASE("help exits zero") {
  auto r = run_cli({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("measure") != std::string::npos);
}

TEST_CASE("scan command fixtures at N=100") {
  auto r = run_cli({"scan-dc", "--n-max", "100"});
  CHECK(r.status == 0);
  Csv csv = parse_csv(r.out);
  CHECK(csv.header == std::vector<std::string>{"n", "delta", "delta_decimal",
                                               "same_floor_band", "same_s",
                                               "divisor_sum_offset"});
  REQUIRE(csv.rows.size() == 99);
  auto row = [&](std::int64_t n) { return csv.rows[static_cast<std::size_t>(n - 1)]; };
  CHECK(row(93)[1] == "0");
  CHECK(row(93)[3] == "true");
  CHECK(row(93)[4] == "true");
  CHECK(row(93)[5] == "0");
  for (std::int64_t n : {94, 86, 85}) CHECK(row(n)[1] == "0");
  CHECK(row(82)[1] == "2/3");
  CHECK(row(73)[1] == "-2/3");
  // summary footer
  REQUIRE(csv.comments.size() == 1);
  CHECK(csv.comments[0].find("zero_delta_rows=") != std::string::npos);

  CHECK(run_cli({"scan-dc", "--n-max", "2"}).status == 2);
}

TEST_CASE("connectance command") {
  auto r = run_cli({"connectance", "--n-max", "4"});
  CHECK(r.status == 0);
  Csv csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 1);
  CHECK(csv.rows[0][1] == "2/3");

  auto sweep = run_cli({"connectance", "--sweep", "100:100000:10"});
  CHECK(sweep.status == 0);
  Csv sweep_csv = parse_csv(sweep.out);
  REQUIRE(sweep_csv.rows.size() == 4);
  double previous = 1e9;
  for (const auto& row : sweep_csv.rows) {
    double rel = std::stod(row[4]);
    CHECK(rel < previous);  // error shrinks as N grows
    previous = rel;
  }

  CHECK(run_cli({"connectance"}).status == 2);
  CHECK(run_cli({"connectance", "--n-max", "10", "--sweep", "2:4:2"}).status == 2);
}

TEST_CASE("gst command") {
  auto r = run_cli({"gst", "--n-max", "20", "--s", "4", "--t", "6"});
  CHECK(r.status == 0);
  Csv csv = parse_csv(r.out);
  CHECK(csv.header == std::vector<std::string>{"s", "t", "gcd", "lcm", "divisor_term",
                                               "multiple_term", "total"});
  REQUIRE(csv.rows.size() == 1);
  CHECK(csv.rows[0] == std::vector<std::string>{"4", "6", "2", "12", "2", "1", "3"});

  auto two = run_cli({"gst", "--n-max", "10", "--s", "4", "--t", "10"});
  CHECK(parse_csv(two.out).rows[0][6] == "2");

  auto adjacent = run_cli({"gst", "--n-max", "20", "--s", "2", "--t", "4"});
  CHECK(adjacent.status == 1);
  CHECK(adjacent.err.find("adjacent") != std::string::npos);
}

TEST_CASE("verify command passes and reports per-measure counts") {
  auto r = run_cli({"verify", "--n-cap", "100"});
  CHECK(r.status == 0);
  Csv csv = parse_csv(r.out);
  REQUIRE(!csv.rows.empty());
  bool saw_betweenness = false;
  for (const auto& row : csv.rows) {
    CHECK(row[3] == "0");  // no mismatches anywhere
    if (row[1] == "betweenness") saw_betweenness = true;
  }
  CHECK(saw_betweenness);
  CHECK(run_cli({"verify", "--n-cap", "6000"}).status == 2);  // above oracle cap
}

TEST_CASE("figure command datasets") {
  auto fig2b = run_cli({"figure", "--which", "2b", "--n-max", "10"});
  CHECK(fig2b.status == 0);
  Csv csv2b = parse_csv(fig2b.out);
  CHECK(csv2b.header == std::vector<std::string>{"n", "multiple_count"});
  REQUIRE(csv2b.rows.size() == 10);
  CHECK(csv2b.rows[0] == std::vector<std::string>{"1", "10"});

  auto fig2a = run_cli({"figure", "--which", "2a", "--n-max", "100"});
  auto fig2c = run_cli({"figure", "--which", "2c", "--n-max", "100"});
  Csv csv2a = parse_csv(fig2a.out);
  Csv csv2c = parse_csv(fig2c.out);
  Csv csv2b100 = parse_csv(run_cli({"figure", "--which", "2b", "--n-max", "100"}).out);
  REQUIRE(csv2a.rows.size() == 100);
  CHECK(csv2a.rows[11] == std::vector<std::string>{"12", "6"});
  CHECK(csv2c.rows[0] == std::vector<std::string>{"1", "99"});
  for (std::size_t i = 0; i < 100; ++i) {
    std::int64_t s = std::stoll(csv2a.rows[i][1]);
    std::int64_t m = std::stoll(csv2b100.rows[i][1]);
    std::int64_t k = std::stoll(csv2c.rows[i][1]);
    CHECK(k == s + m - 2);
  }

  auto fig3 = run_cli({"figure", "--which", "3", "--n-max", "200"});
  CHECK(fig3.status == 0);
  Csv csv3 = parse_csv(fig3.out);
  CHECK(csv3.header == std::vector<std::string>{"n", "delta_clustering"});
  REQUIRE(csv3.rows.size() == 199);
  for (const auto& row : csv3.rows) {
    double v = std::stod(row[1]);
    CHECK(v >= -1.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("json format emits an array with csv-identical keys") {
  auto r = run_cli({"measure", "--n-max", "10", "--vertices", "6",
                    "--measures", "clustering", "--format", "json"});
  CHECK(r.status == 0);
  auto parsed = nlohmann::ordered_json::parse(r.out);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  std::vector<std::string> keys;
  for (auto it = parsed[0].begin(); it != parsed[0].end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "clustering", "clustering_decimal", "error"});
  CHECK(parsed[0]["clustering"] == "2/3");

  // scan summary goes to the diagnostic stream for json output
  auto scan = run_cli({"scan-dc", "--n-max", "10", "--format", "json"});
  CHECK(scan.status == 0);
  CHECK(nlohmann::json::parse(scan.out).is_array());
  CHECK(scan.err.find("zero_delta_rows=") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
  std::vector<std::vector<std::string>> invocations{
      {"measure", "--n-max", "50", "--measures",
       "degree,neighbor_edges,clustering,mean_geodesic,nonedge_pairs,betweenness"},
      {"scan-dc", "--n-max", "60"},
      {"connectance", "--sweep", "10:1000:3.7"},
      {"figure", "--which", "3", "--n-max", "50", "--format", "json"},
  };
  for (const auto& args : invocations) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("betweenness budget surfaces per-row, override lifts it") {
  // Vertex 1 of G_20001 has 20000 neighbors, above the default budget.
  auto refused = run_cli({"measure", "--n-max", "20001", "--vertices", "1",
                          "--measures", "betweenness"});
  CHECK(refused.status == 0);  // row is marked invalid, table still emitted
  Csv csv = parse_csv(refused.out);
  REQUIRE(csv.rows.size() == 1);
  CHECK(csv.rows[0][1] == "");
  CHECK(csv.rows[0][2].find("budget") != std::string::npos);
}

TEST_CASE("sieve cap honors DIVGRAPH_SIEVE_CAP") {
  setenv("DIVGRAPH_SIEVE_CAP", "50", 1);
  auto refused = run_cli({"measure", "--n-max", "100", "--measures", "degree"});
  CHECK(refused.status == 1);
  CHECK(refused.err.find("50") != std::string::npos);
  setenv("DIVGRAPH_SIEVE_CAP", "not-a-number", 1);
  CHECK(run_cli({"measure", "--n-max", "100", "--measures", "degree"}).status == 1);
  unsetenv("DIVGRAPH_SIEVE_CAP");
  CHECK(run_cli({"measure", "--n-max", "100", "--measures", "degree"}).status == 0);
}

TEST_CASE("output lands in --out file byte-identically to stdout") {
  std::string path = "cli_out_test.csv";
  auto to_file = run_cli({"connectance", "--n-max", "100", "--out", path});
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream contents;
  contents << in.rdbuf();
  auto to_stdout = run_cli({"connectance", "--n-max", "100"});
  CHECK(contents.str() == to_stdout.out);
  std::remove(path.c_str());
}
