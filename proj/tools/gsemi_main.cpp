#include <cstdio>
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "gsemi/report.hpp"
#include "gsemi/version.hpp"

namespace {

void add_common(CLI::App* cmd, gsemi::ExperimentConfig& config,
                bool needs_graph = true) {
  if (needs_graph)
    cmd->add_option("--graph", config.graph_source,
                    "graph source: turan:L,w | minimizer:L,w | complete:L | "
                    "edgeless:L | cycle:L | file:path")
        ->required();
  cmd->add_option("--p-max", config.p_max, "largest half-order p");
  cmd->add_option("--radius", config.radius,
                  "truncation radius (0 = max(omega, 6))");
  cmd->add_option("--tol", config.tol, "iterative eigensolver tolerance");
  cmd->add_option("--seed", config.seed, "seed for randomized suites");
  cmd->add_option("--output", config.output_path, "report file (atomic write)");
  cmd->add_option("--format", config.format, "output format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void print_summary(const gsemi::RunReport& report) {
  const auto& results = report.report["results"];
  std::cout << results.dump(2) << "\n";
  if (report.falsification_count > 0)
    std::cout << "FALSIFICATIONS: "
              << report.report["falsifications"].dump(2) << "\n";
  else
    std::cout << "falsifications: none\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moments and norms of graph-independent semicircle sums"};
  app.set_version_flag("--version", gsemi::kVersion);
  app.require_subcommand(1);

  gsemi::ExperimentConfig config;

  auto* moment = app.add_subcommand(
      "moment", "exact moments with the closed-walk cross-check");
  add_common(moment, config);

  auto* walks = app.add_subcommand(
      "walks", "closed-walk counts on the trace-monoid Cayley graph");
  add_common(walks, config);

  auto* norm = app.add_subcommand(
      "norm", "certified lower bounds vs proved upper bounds");
  add_common(norm, config);

  auto* bijection = app.add_subcommand(
      "bijection-verify", "exhaustive checks of the path bijection");
  add_common(bijection, config);

  auto* khintchine = app.add_subcommand(
      "khintchine-verify", "scalar Khintchine bound on random weights");
  add_common(khintchine, config);
  khintchine->add_option("--trials", config.trials,
                         "random weight vectors per order");

  auto* fock = app.add_subcommand(
      "fock", "truncated Fock-space realization and vacuum moments");
  add_common(fock, config);

  auto* bounds = app.add_subcommand(
      "bounds", "clique/chromatic/eigenvalue norm bounds");
  add_common(bounds, config);

  auto* sweep = app.add_subcommand(
      "extremal-sweep", "all labeled graphs at fixed clique number");
  add_common(sweep, config, false);
  sweep->add_option("--L", config.L, "vertex count")->required();
  sweep->add_option("--omega", config.omega, "clique number")->required();

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  try {
    gsemi::RunReport report = gsemi::run(config);
    print_summary(report);
    return report.falsification_count == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
