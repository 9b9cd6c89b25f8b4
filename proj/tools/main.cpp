// lyagraph: realizability checks for abstract Lyapunov graphs.
//
// Exit codes: 0 realizable (or success), 1 valid graph that is not
// realizable, 2 invalid input or usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lyagraph/checker.hpp"
#include "lyagraph/enumerate.hpp"
#include "lyagraph/io.hpp"
#include "lyagraph/sft.hpp"

namespace {

constexpr int kExitRealizable = 0;
constexpr int kExitNotRealizable = 1;
constexpr int kExitInvalid = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lyagraph::Target target_or_throw(const std::string& s) {
  if (auto t = lyagraph::parse_target(s)) return *t;
  throw InputError("unknown target '" + s + "' (expected s2xs1 or s3)");
}

struct BoundsArgs {
  std::size_t max_vertices = 3;
  std::int64_t max_weight = 1;
  std::size_t max_parallel = 1;
  std::string matrices_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-vertices", max_vertices, "Largest vertex count")->check(CLI::PositiveNumber);
    cmd->add_option("--max-weight", max_weight, "Largest edge weight")->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-parallel", max_parallel, "Largest multiplicity between two vertices")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--matrices", matrices_file, "File of sft declarations forming the matrix pool");
  }

  lyagraph::EnumerationBounds build() const {
    lyagraph::EnumerationBounds b;
    b.max_vertices = max_vertices;
    b.max_weight = max_weight;
    b.max_parallel_edges = max_parallel;
    if (matrices_file.empty()) {
      b.label_pool = lyagraph::default_label_pool();
    } else {
      const auto matrices = lyagraph::parse_matrix_list(read_file(matrices_file));
      b.label_pool = lyagraph::default_label_pool(matrices);
    }
    return b;
  }
};

int run_check(const std::string& file, const std::string& target, bool as_json, bool explain) {
  const auto doc = lyagraph::parse_graph(read_file(file));
  const auto report = lyagraph::check(doc.graph, target_or_throw(target));
  if (explain) {
    std::cout << lyagraph::render_explanation(doc.graph, report);
  } else {
    std::cout << lyagraph::render_report(
        report, as_json ? lyagraph::ReportFormat::Json : lyagraph::ReportFormat::Text);
  }
  if (!report.structure.valid()) return kExitInvalid;
  return report.realizable ? kExitRealizable : kExitNotRealizable;
}

int run_invariants(const std::string& file, bool as_json) {
  const auto matrices = lyagraph::parse_matrix_list(read_file(file));
  if (matrices.size() != 1) {
    throw InputError("invariants expects exactly one sft declaration, found " +
                     std::to_string(matrices.size()));
  }
  const auto report = lyagraph::invariant_report(matrices.front());
  std::cout << lyagraph::render_invariants(
      matrices.front(), report, as_json ? lyagraph::ReportFormat::Json : lyagraph::ReportFormat::Text);
  return kExitRealizable;
}

int run_enumerate(const BoundsArgs& args, const std::string& target, bool count_only,
                  std::size_t workers) {
  const auto t = target_or_throw(target);
  const auto bounds = args.build();
  lyagraph::EnumerationOptions opts;
  opts.budget = lyagraph::budget_from_environment();
  opts.workers = workers;
  if (count_only) {
    const auto c = lyagraph::count_realizable(bounds, t, opts);
    std::cout << "total: " << c.total << "\nrealizable: " << c.realizable << "\n";
    return kExitRealizable;
  }
  std::uint64_t total = 0, realizable = 0;
  lyagraph::enumerate_graphs(
      bounds,
      [&](const lyagraph::LyapunovGraph& g) {
        const bool ok = lyagraph::check(g, t).realizable;
        ++total;
        realizable += ok ? 1 : 0;
        std::cout << "# graph " << total << ": " << (ok ? "REALIZABLE" : "NOT REALIZABLE") << "\n"
                  << lyagraph::render_dsl(g) << "\n";
      },
      opts.budget);
  std::cout << "# total: " << total << "\n# realizable: " << realizable << "\n";
  return kExitRealizable;
}

int run_random(const BoundsArgs& args, std::uint64_t seed, bool as_json) {
  const auto g = lyagraph::random_graph(seed, args.build());
  std::cout << (as_json ? lyagraph::render_json(g) : lyagraph::render_dsl(g));
  return kExitRealizable;
}

int run_transform(const std::string& file, bool as_json) {
  const auto doc = lyagraph::parse_graph(read_file(file));
  const auto g = lyagraph::reverse(doc.graph);
  const bool json_out = as_json || doc.format == lyagraph::SourceFormat::Json;
  std::cout << (json_out ? lyagraph::render_json(g) : lyagraph::render_dsl(g));
  return kExitRealizable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability of abstract Lyapunov graphs as Smale flows on S2xS1 and S3"};
  app.require_subcommand(1);

  std::string file, target = "s2xs1";
  bool as_json = false;

  auto* check_cmd = app.add_subcommand("check", "Check a graph against a target manifold");
  check_cmd->add_option("file", file, "Graph file (DSL or JSON)")->required();
  check_cmd->add_option("--target", target, "s2xs1 or s3")->required();
  check_cmd->add_flag("--json", as_json, "Emit the report as JSON");

  auto* explain_cmd = app.add_subcommand("explain", "Check and show the per-vertex quantities");
  explain_cmd->add_option("file", file, "Graph file (DSL or JSON)")->required();
  explain_cmd->add_option("--target", target, "s2xs1 or s3")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "Invariants of a single sft matrix");
  inv_cmd->add_option("file", file, "File with one sft declaration")->required();
  inv_cmd->add_flag("--json", as_json, "Emit JSON");

  BoundsArgs enum_bounds;
  bool count_only = false;
  std::size_t workers = 1;
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate graphs within bounds and check each");
  enum_bounds.attach(enum_cmd);
  enum_cmd->add_option("--target", target, "s2xs1 or s3")->required();
  enum_cmd->add_flag("--count-only", count_only, "Print only the totals");
  enum_cmd->add_option("--workers", workers, "Worker threads for --count-only")->check(CLI::PositiveNumber);

  BoundsArgs random_bounds;
  std::uint64_t seed = 0;
  auto* random_cmd = app.add_subcommand("random", "Sample a seeded random graph");
  random_cmd->add_option("--seed", seed, "64-bit seed")->required();
  random_bounds.attach(random_cmd);
  random_cmd->add_flag("--json", as_json, "Emit JSON instead of DSL");

  bool reverse_flag = false;
  auto* transform_cmd = app.add_subcommand("transform", "Graph transforms");
  transform_cmd->add_flag("--reverse", reverse_flag, "Time reversal")->required();
  transform_cmd->add_option("file", file, "Graph file (DSL or JSON)")->required();
  transform_cmd->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*check_cmd) return run_check(file, target, as_json, false);
    if (*explain_cmd) return run_check(file, target, false, true);
    if (*inv_cmd) return run_invariants(file, as_json);
    if (*enum_cmd) return run_enumerate(enum_bounds, target, count_only, workers);
    if (*random_cmd) return run_random(random_bounds, seed, as_json);
    if (*transform_cmd) return run_transform(file, as_json);
  } catch (const lyagraph::ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
