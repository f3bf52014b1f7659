#include "divgraph/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "divgraph/errors.hpp"
#include "divgraph/oracle.hpp"

namespace divgraph::cli {

namespace {

constexpr std::int64_t kFigure2DefaultN = 10'000;
constexpr std::int64_t kFigure3DefaultN = 5'000;

void emit_table(const Table& table, const OutputConfig& config, std::ostream& out) {
  if (config.out_path.empty()) {
    table.write(out, config);
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + config.out_path);
  table.write(file, config);
  if (!file) throw std::runtime_error("write to " + config.out_path + " failed");
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid " + what + ": '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("invalid " + what + ": '" + text + "'");
  }
  return value;
}

SpfSieve make_sieve(std::int64_t limit) { return SpfSieve(limit, sieve_cap_from_env()); }

double maybe_normalize(double x, std::int64_t n_max, const OutputConfig& config) {
  if (!config.normalized_betweenness) return x;
  return x / (static_cast<double>(n_max - 1) * static_cast<double>(n_max - 2));
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return kExitUsageError;
}

int compute_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << "\n";
  return kExitComputeError;
}

}  // namespace

std::int64_t sieve_cap_from_env() {
  const char* raw = std::getenv("DIVGRAPH_SIEVE_CAP");
  if (raw == nullptr || *raw == '\0') return SpfSieve::kDefaultCap;
  std::int64_t cap = parse_int(raw, "DIVGRAPH_SIEVE_CAP");
  if (cap < 2) throw std::invalid_argument("DIVGRAPH_SIEVE_CAP must be at least 2");
  return cap;
}

VertexRange parse_vertex_range(const std::string& text) {
  std::size_t sep = text.find("..");
  if (sep == std::string::npos) {
    std::int64_t v = parse_int(text, "vertex");
    return {v, v};
  }
  VertexRange range;
  range.lo = parse_int(text.substr(0, sep), "vertex range start");
  range.hi = parse_int(text.substr(sep + 2), "vertex range end");
  if (range.lo > range.hi) {
    throw std::invalid_argument("vertex range '" + text + "' is empty");
  }
  return range;
}

MeasureSelection parse_measures(const std::string& text) {
  MeasureSelection selection;
  std::stringstream stream(text);
  std::string token;
  bool any = false;
  while (std::getline(stream, token, ',')) {
    std::replace(token.begin(), token.end(), '-', '_');
    if (token == "degree") {
      selection.degree = true;
    } else if (token == "neighbor_edges") {
      selection.neighbor_edges = true;
    } else if (token == "clustering") {
      selection.clustering = true;
    } else if (token == "mean_geodesic") {
      selection.mean_geodesic = true;
    } else if (token == "nonedge_pairs") {
      selection.nonedge_pairs = true;
    } else if (token == "betweenness") {
      selection.betweenness = true;
    } else {
      throw std::invalid_argument(
          "unknown measure '" + token +
          "' (expected degree, neighbor_edges, clustering, mean_geodesic, "
          "nonedge_pairs or betweenness)");
    }
    any = true;
  }
  if (!any) throw std::invalid_argument("measure list is empty");
  return selection;
}

std::vector<std::int64_t> parse_sweep(const std::string& text) {
  std::size_t first = text.find(':');
  std::size_t second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("sweep must be start:stop:factor, got '" + text + "'");
  }
  std::int64_t start = parse_int(text.substr(0, first), "sweep start");
  std::int64_t stop = parse_int(text.substr(first + 1, second - first - 1), "sweep stop");
  double factor = 0.0;
  try {
    std::size_t used = 0;
    factor = std::stod(text.substr(second + 1), &used);
    if (used != text.size() - second - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid sweep factor in '" + text + "'");
  }
  if (start < 2 || stop < start) {
    throw std::invalid_argument("sweep bounds must satisfy 2 <= start <= stop");
  }
  if (!(factor > 1.0)) throw std::invalid_argument("sweep factor must be greater than 1");
  std::vector<std::int64_t> values;
  double v = static_cast<double>(start);
  while (true) {
    std::int64_t n = std::llround(v);
    if (n >= stop) break;
    if (values.empty() || n > values.back()) values.push_back(n);
    v *= factor;
  }
  values.push_back(stop);
  return values;
}

int cmd_measure(const MeasureArgs& args, const OutputConfig& config,
                std::ostream& out, std::ostream& err) {
  if (args.n_max < 2) return usage_error(err, "--n-max must be at least 2");
  if (args.vertices.lo < 1 || args.vertices.hi > args.n_max ||
      args.vertices.lo > args.vertices.hi) {
    return usage_error(err, "--vertices must lie within 1.." + std::to_string(args.n_max));
  }
  const MeasureSelection& sel = args.selection;
  if (!sel.degree && !sel.neighbor_edges && !sel.clustering && !sel.mean_geodesic &&
      !sel.nonedge_pairs && !sel.betweenness) {
    return usage_error(err, "--measures selects nothing");
  }
  try {
    GraphSpec spec{args.n_max};
    SpfSieve sieve = make_sieve(args.n_max);
    BetweennessGuard guard;
    guard.allow_large = args.allow_large_betweenness;
    auto records = measure_table(spec, args.vertices, sel, sieve, guard);

    std::vector<Column> columns{{"n", ColumnKind::integer}};
    if (sel.degree) columns.push_back({"degree", ColumnKind::integer});
    if (sel.neighbor_edges) columns.push_back({"neighbor_edges", ColumnKind::integer});
    if (sel.clustering) {
      columns.push_back({"clustering", ColumnKind::text});
      columns.push_back({"clustering_decimal", ColumnKind::real});
    }
    if (sel.mean_geodesic) {
      columns.push_back({"mean_geodesic", ColumnKind::text});
      columns.push_back({"mean_geodesic_decimal", ColumnKind::real});
    }
    if (sel.nonedge_pairs) columns.push_back({"nonedge_pairs", ColumnKind::integer});
    if (sel.betweenness) columns.push_back({"betweenness", ColumnKind::real});
    columns.push_back({"error", ColumnKind::text});

    Table table(std::move(columns));
    for (const auto& rec : records) {
      std::vector<Cell> row{rec.n};
      auto push_int = [&row](const std::optional<std::int64_t>& v) {
        if (v) row.emplace_back(*v);
        else row.emplace_back(std::monostate{});
      };
      auto push_ratio = [&row](const std::optional<ExactRatio>& v) {
        if (v) {
          row.emplace_back(v->str());
          row.emplace_back(v->to_double());
        } else {
          row.emplace_back(std::monostate{});
          row.emplace_back(std::monostate{});
        }
      };
      if (sel.degree) push_int(rec.degree);
      if (sel.neighbor_edges) push_int(rec.neighbor_edges);
      if (sel.clustering) push_ratio(rec.clustering);
      if (sel.mean_geodesic) push_ratio(rec.mean_geodesic);
      if (sel.nonedge_pairs) push_int(rec.nonedge_pairs);
      if (sel.betweenness) {
        if (rec.betweenness) {
          row.emplace_back(maybe_normalize(*rec.betweenness, args.n_max, config));
        } else {
          row.emplace_back(std::monostate{});
        }
      }
      row.emplace_back(rec.error);
      table.add_row(std::move(row));
    }
    emit_table(table, config, out);
    return kExitOk;
  } catch (const std::exception& e) {
    return compute_error(err, e);
  }
}

int cmd_scan_dc(std::int64_t n_max, const OutputConfig& config,
                std::ostream& out, std::ostream& err) {
  if (n_max < 3) return usage_error(err, "--n-max must be at least 3 for a scan");
  try {
    GraphSpec spec{n_max};
    SpfSieve sieve = make_sieve(n_max);
    auto records = delta_clustering_scan(spec, {1, n_max - 1}, sieve);

    Table table({{"n", ColumnKind::integer},
                 {"delta", ColumnKind::text},
                 {"delta_decimal", ColumnKind::real},
                 {"same_floor_band", ColumnKind::boolean},
                 {"same_s", ColumnKind::boolean},
                 {"divisor_sum_offset", ColumnKind::integer}});
    std::int64_t zero_rows = 0;
    for (const auto& rec : records) {
      if (rec.delta.is_zero()) ++zero_rows;
      table.add_row({rec.n, rec.delta.str(), rec.delta.to_double(), rec.same_floor_band,
                     rec.same_s, rec.divisor_sum_offset});
    }
    std::string summary = "zero_delta_rows=" + std::to_string(zero_rows);
    if (config.format == OutputFormat::csv) {
      table.add_footer_comment(summary);
    } else {
      err << summary << "\n";
    }
    emit_table(table, config, out);
    return kExitOk;
  } catch (const std::exception& e) {
    return compute_error(err, e);
  }
}

int cmd_connectance(const std::vector<std::int64_t>& n_values, const OutputConfig& config,
                    std::ostream& out, std::ostream& err) {
  if (n_values.empty()) return usage_error(err, "no graph sizes given");
  for (std::int64_t n : n_values) {
    if (n < 2) return usage_error(err, "graph sizes must be at least 2");
  }
  try {
    Table table({{"n_max", ColumnKind::integer},
                 {"connectance", ColumnKind::text},
                 {"connectance_decimal", ColumnKind::real},
                 {"asymptotic", ColumnKind::real},
                 {"rel_error", ColumnKind::real}});
    for (std::int64_t n : n_values) {
      GraphSpec spec{n};
      ExactRatio exact = connectance_exact(spec);
      double asym = connectance_asymptotic(spec);
      double rel = std::abs(exact.to_double() - asym) / exact.to_double();
      table.add_row({n, exact.str(), exact.to_double(), asym, rel});
    }
    emit_table(table, config, out);
    return kExitOk;
  } catch (const std::exception& e) {
    return compute_error(err, e);
  }
}

int cmd_gst(std::int64_t n_max, std::int64_t s, std::int64_t t, const OutputConfig& config,
            std::ostream& out, std::ostream& err) {
  if (n_max < 2) return usage_error(err, "--n-max must be at least 2");
  try {
    GraphSpec spec{n_max};
    SpfSieve sieve = make_sieve(n_max);
    std::int64_t total = geodesic_path_count(s, t, spec, sieve);
    std::int64_t d = gcd(s, t);
    std::int64_t lcm = s / d * t;
    std::int64_t divisor_term = divisor_count(d, sieve);
    std::int64_t multiple_term = n_max / lcm;

    Table table({{"s", ColumnKind::integer},
                 {"t", ColumnKind::integer},
                 {"gcd", ColumnKind::integer},
                 {"lcm", ColumnKind::integer},
                 {"divisor_term", ColumnKind::integer},
                 {"multiple_term", ColumnKind::integer},
                 {"total", ColumnKind::integer}});
    table.add_row({s, t, d, lcm, divisor_term, multiple_term, total});
    emit_table(table, config, out);
    return kExitOk;
  } catch (const std::exception& e) {
    return compute_error(err, e);
  }
}

namespace {

struct VerifyCounter {
  std::int64_t checked = 0;
  std::int64_t mismatches = 0;
};

struct VerifyFailure {
  std::int64_t n_max;
  std::int64_t n;
  std::string measure;
  std::string analytic;
  std::string oracle;
};

ExactRatio oracle_clustering_ratio(const OracleGraph& g, std::int64_t n) {
  std::int64_t k = oracle_degree(g, n);
  if (k < 2) return ExactRatio(0, 1);
  return ExactRatio(oracle_neighbor_edges(g, n), k * (k - 1) / 2);
}

}  // namespace

int cmd_verify(std::int64_t n_cap, const OutputConfig& config,
               std::ostream& out, std::ostream& err) {
  if (n_cap < 2 || n_cap > OracleGraph::kMaxVertices) {
    return usage_error(err, "--n-cap must lie within 2.." +
                                std::to_string(OracleGraph::kMaxVertices));
  }
  try {
    std::vector<std::int64_t> schedule;
    for (std::int64_t n : {4, 10, 20, 50, 100, 200, 300, 500, 1000, 2000, 5000}) {
      if (n <= n_cap) schedule.push_back(n);
    }
    if (schedule.empty() || schedule.back() != n_cap) schedule.push_back(n_cap);

    SpfSieve sieve = make_sieve(schedule.back());
    Table table({{"n_max", ColumnKind::integer},
                 {"measure", ColumnKind::text},
                 {"checked", ColumnKind::integer},
                 {"mismatches", ColumnKind::integer}});
    std::vector<VerifyFailure> failures;
    std::int64_t total_mismatches = 0;

    for (std::int64_t n_max : schedule) {
      OracleGraph g(n_max);
      GraphSpec spec{n_max};
      std::map<std::string, VerifyCounter> counters;
      auto record = [&](const std::string& measure, std::int64_t n, bool ok,
                        const std::string& analytic, const std::string& oracle) {
        VerifyCounter& c = counters[measure];
        ++c.checked;
        if (!ok) {
          ++c.mismatches;
          ++total_mismatches;
          if (failures.size() < 10) failures.push_back({n_max, n, measure, analytic, oracle});
        }
      };

      std::int64_t analytic_edges = dirichlet_sum(n_max) - n_max;
      record("edge_count", 0, analytic_edges == g.edge_count(),
             std::to_string(analytic_edges), std::to_string(g.edge_count()));

      for (std::int64_t n = 1; n <= n_max; ++n) {
        std::int64_t k = degree(n, spec, sieve);
        record("degree", n, k == oracle_degree(g, n), std::to_string(k),
               std::to_string(oracle_degree(g, n)));

        std::int64_t e = neighbor_edge_count(n, spec, sieve);
        record("neighbor_edges", n, e == oracle_neighbor_edges(g, n), std::to_string(e),
               std::to_string(oracle_neighbor_edges(g, n)));

        ExactRatio c = clustering(n, spec, sieve);
        ExactRatio c_oracle = oracle_clustering_ratio(g, n);
        record("clustering", n, c == c_oracle, c.str(), c_oracle.str());

        auto dist = oracle_distances(g, n);
        std::int64_t dist_total = 0;
        for (std::int64_t m = 1; m <= n_max; ++m) dist_total += dist[m];
        ExactRatio l = mean_geodesic(n, spec, sieve);
        ExactRatio l_oracle(dist_total, n_max);
        record("mean_geodesic", n, l == l_oracle, l.str(), l_oracle.str());

        std::int64_t nonedge = nonedge_neighbor_pairs(n, spec, sieve);
        std::int64_t nonedge_oracle = k * (k - 1) / 2 - oracle_neighbor_edges(g, n);
        record("nonedge_pairs", n, nonedge == nonedge_oracle, std::to_string(nonedge),
               std::to_string(nonedge_oracle));

        if (n_max <= 300) {
          bool all_match = true;
          for (std::int64_t m = 1; m <= n_max; ++m) {
            if (geodesic_distance(n, m, spec) != dist[m]) all_match = false;
          }
          record("distance", n, all_match, "classified", "bfs");

          double x = betweenness(n, spec, sieve);
          double x_oracle = oracle_betweenness(g, n);
          record("betweenness", n, std::abs(x - x_oracle) <= 1e-9,
                 format_real(x, 12), format_real(x_oracle, 12));
        }
      }

      for (const auto& [measure, counter] : counters) {
        table.add_row({n_max, measure, counter.checked, counter.mismatches});
      }
    }

    emit_table(table, config, out);
    for (const auto& f : failures) {
      err << "mismatch: n_max=" << f.n_max << " n=" << f.n << " measure=" << f.measure
          << " analytic=" << f.analytic << " oracle=" << f.oracle << "\n";
    }
    return total_mismatches == 0 ? kExitOk : kExitComputeError;
  } catch (const std::exception& e) {
    return compute_error(err, e);
  }
}

int cmd_figure(FigureId which, std::optional<std::int64_t> n_max, const OutputConfig& config,
               std::ostream& out, std::ostream& err) {
  std::int64_t n = n_max.value_or(which == FigureId::fig3 ? kFigure3DefaultN
                                                          : kFigure2DefaultN);
  if (n < 2 || (which == FigureId::fig3 && n < 3)) {
    return usage_error(err, "--n-max too small for this figure");
  }
  try {
    GraphSpec spec{n};
    SpfSieve sieve = make_sieve(n);
    switch (which) {
      case FigureId::fig2a: {
        Table table({{"n", ColumnKind::integer}, {"divisor_count", ColumnKind::integer}});
        for (std::int64_t v = 1; v <= n; ++v) table.add_row({v, divisor_count(v, sieve)});
        emit_table(table, config, out);
        break;
      }
      case FigureId::fig2b: {
        Table table({{"n", ColumnKind::integer}, {"multiple_count", ColumnKind::integer}});
        for (std::int64_t v = 1; v <= n; ++v) table.add_row({v, n / v});
        emit_table(table, config, out);
        break;
      }
      case FigureId::fig2c: {
        Table table({{"n", ColumnKind::integer}, {"degree", ColumnKind::integer}});
        for (std::int64_t v = 1; v <= n; ++v) table.add_row({v, degree(v, spec, sieve)});
        emit_table(table, config, out);
        break;
      }
      case FigureId::fig3: {
        Table table({{"n", ColumnKind::integer}, {"delta_clustering", ColumnKind::real}});
        for (const auto& rec : delta_clustering_scan(spec, {1, n - 1}, sieve)) {
          table.add_row({rec.n, rec.delta.to_double()});
        }
        emit_table(table, config, out);
        break;
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return compute_error(err, e);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural measures of divisibility graphs from closed-form "
               "number theory, with a brute-force verification oracle"};
  app.require_subcommand(1);

  OutputConfig config;
  std::string format_name = "csv";
  auto add_output_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", config.out_path, "output file path (default: stdout)");
    cmd->add_option("--precision", config.precision,
                    "decimal places for real-valued fields")
        ->check(CLI::Range(1, 17));
  };

  std::int64_t n_max = 0;
  std::string vertices_text;
  std::string measures_text;
  bool allow_large = false;
  bool normalized = false;

  CLI::App* measure = app.add_subcommand("measure", "per-vertex measure table");
  measure->add_option("--n-max", n_max, "graph size N")->required();
  measure->add_option("--vertices", vertices_text, "vertex or range a..b (default: all)");
  measure->add_option("--measures", measures_text,
                      "comma-separated: degree,neighbor_edges,clustering,"
                      "mean_geodesic,nonedge_pairs,betweenness")
      ->required();
  measure->add_flag("--normalized", normalized, "emit betweenness divided by (N-1)(N-2)");
  measure->add_flag("--allow-large-betweenness", allow_large,
                    "override the neighbor-pair enumeration budget");
  add_output_options(measure);

  CLI::App* scan = app.add_subcommand("scan-dc", "consecutive clustering differences");
  scan->add_option("--n-max", n_max, "graph size N")->required();
  add_output_options(scan);

  std::string sweep_text;
  CLI::App* connectance = app.add_subcommand("connectance", "exact vs asymptotic link density");
  connectance->add_option("--n-max", n_max, "single graph size N");
  connectance->add_option("--sweep", sweep_text, "logarithmic sweep start:stop:factor");
  add_output_options(connectance);

  std::int64_t gst_s = 0, gst_t = 0;
  CLI::App* gst = app.add_subcommand("gst", "geodesic path count between two vertices");
  gst->add_option("--n-max", n_max, "graph size N")->required();
  gst->add_option("--s", gst_s, "first vertex")->required();
  gst->add_option("--t", gst_t, "second vertex")->required();
  add_output_options(gst);

  std::int64_t n_cap = 0;
  CLI::App* verify = app.add_subcommand("verify", "analytic vs brute-force comparison");
  verify->add_option("--n-cap", n_cap, "largest graph size in the schedule")->required();
  add_output_options(verify);

  std::string figure_name;
  CLI::App* figure = app.add_subcommand("figure", "plot-ready datasets");
  figure->add_option("--which", figure_name, "figure id: 2a, 2b, 2c or 3")
      ->required()
      ->check(CLI::IsMember({"2a", "2b", "2c", "3"}));
  CLI::Option* figure_n = figure->add_option("--n-max", n_max, "graph size N (default per figure)");
  add_output_options(figure);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'divgraph --help' for usage\n";
    return kExitUsageError;
  }
  config.normalized_betweenness = normalized;
  config.format = format_name == "json" ? OutputFormat::json : OutputFormat::csv;

  try {
    if (measure->parsed()) {
      MeasureArgs margs;
      margs.n_max = n_max;
      margs.vertices = vertices_text.empty() ? VertexRange{1, n_max}
                                             : parse_vertex_range(vertices_text);
      margs.selection = parse_measures(measures_text);
      margs.allow_large_betweenness = allow_large;
      return cmd_measure(margs, config, out, err);
    }
    if (scan->parsed()) return cmd_scan_dc(n_max, config, out, err);
    if (connectance->parsed()) {
      bool has_single = connectance->count("--n-max") > 0;
      bool has_sweep = !sweep_text.empty();
      if (has_single == has_sweep) {
        return usage_error(err, "connectance needs exactly one of --n-max or --sweep");
      }
      std::vector<std::int64_t> values =
          has_sweep ? parse_sweep(sweep_text) : std::vector<std::int64_t>{n_max};
      return cmd_connectance(values, config, out, err);
    }
    if (gst->parsed()) return cmd_gst(n_max, gst_s, gst_t, config, out, err);
    if (verify->parsed()) return cmd_verify(n_cap, config, out, err);
    if (figure->parsed()) {
      FigureId which = FigureId::fig3;
      if (figure_name == "2a") which = FigureId::fig2a;
      if (figure_name == "2b") which = FigureId::fig2b;
      if (figure_name == "2c") which = FigureId::fig2c;
      std::optional<std::int64_t> figure_n_max;
      if (figure_n->count() > 0) figure_n_max = n_max;
      return cmd_figure(which, figure_n_max, config, out, err);
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(err, e.what());
  }
  return usage_error(err, "no subcommand given");
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace divgraph::cli
