#include "gsemi/report.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "gsemi/cayley.hpp"
#include "gsemi/fock.hpp"
#include "gsemi/io.hpp"
#include "gsemi/moments.hpp"
#include "gsemi/version.hpp"

namespace gsemi {

namespace {

std::string dec(const BigInt& v) { return v.get_str(); }

std::string dec(const BigRat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

nlohmann::json bound_json(const BoundReport& rep) {
  return {{"which", rep.which},
          {"lhs", rep.lhs},
          {"rhs", rep.rhs},
          {"slack", rep.slack},
          {"holds", rep.holds}};
}

CoefficientVector random_dyadic_alpha(int L, std::mt19937& rng) {
  // dyadic weights in [-1, 1]: exactly representable, reproducible
  std::uniform_int_distribution<int> k(-64, 64);
  CoefficientVector cv;
  cv.values.reserve(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i)
    cv.values.push_back({static_cast<double>(k(rng)) / 64.0, 0.0});
  return cv;
}

int auto_radius(const ExperimentConfig& config, const SimpleGraph& g) {
  if (config.radius > 0) return config.radius;
  return std::max(clique_number(g), 6);
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < header.size(); ++c)
      os << (c ? "," : "") << csv_field(header[c]);
    os << "\r\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        os << (c ? "," : "") << csv_field(row[c]);
      os << "\r\n";
    }
    return os.str();
  }
};

void run_moment(const ExperimentConfig& config, const SimpleGraph& g,
                nlohmann::json& results, nlohmann::json& falsifications,
                CsvTable& csv) {
  results["graph"] = graph_to_json(g);
  csv.header = {"p", "moment", "normalized", "walk_count", "agrees"};
  results["rows"] = nlohmann::json::array();
  for (int p = 1; p <= config.p_max; ++p) {
    BigInt moment = moment_unweighted(g, p);
    BigRat normalized = moment_normalized(g, p);
    BigInt walks = closed_walk_count(g, p);
    bool agrees = moment == walks;
    results["rows"].push_back({{"p", p},
                               {"moment", dec(moment)},
                               {"normalized", dec(normalized)},
                               {"normalized_value", normalized.get_d()},
                               {"walk_count", dec(walks)},
                               {"agrees", agrees}});
    csv.rows.push_back({std::to_string(p), dec(moment), dec(normalized),
                        dec(walks), agrees ? "true" : "false"});
    if (!agrees)
      falsifications.push_back(
          {{"which", "moment-vs-walk-count"},
           {"p", p},
           {"moment", dec(moment)},
           {"walk_count", dec(walks)}});
  }
}

void run_walks(const ExperimentConfig& config, const SimpleGraph& g,
               nlohmann::json& results, CsvTable& csv) {
  WalkCountTable table = walk_count_table(g, config.p_max);
  results["counts"] = nlohmann::json::object();
  csv.header = {"p", "closed_walks", "lower_bound", "normalized_lower_bound"};
  double sqrt_l = std::sqrt(std::max(1, g.vertex_count()));
  for (int p = 0; p <= config.p_max; ++p)
    results["counts"][std::to_string(p)] =
        dec(table.counts[static_cast<std::size_t>(p)]);
  results["lower_bounds"] = nlohmann::json::array();
  results["normalized_lower_bounds"] = nlohmann::json::array();
  for (int p = 1; p <= config.p_max; ++p) {
    double lb = std::pow(table.counts[static_cast<std::size_t>(p)].get_d(),
                         1.0 / (2.0 * p));
    results["lower_bounds"].push_back(lb);
    results["normalized_lower_bounds"].push_back(lb / sqrt_l);
    csv.rows.push_back({std::to_string(p),
                        dec(table.counts[static_cast<std::size_t>(p)]),
                        std::to_string(lb), std::to_string(lb / sqrt_l)});
  }
}

void run_norm(const ExperimentConfig& config, const SimpleGraph& g,
              nlohmann::json& results, nlohmann::json& falsifications,
              CsvTable& csv) {
  int radius = auto_radius(config, g);
  CliqueReport cr = clique_report(g);
  std::vector<double> lower = spectral_lower_bounds(g, config.p_max);
  double compression = spectral_power_estimate(g, radius, config.tol);
  double best_lower = compression;
  for (double lb : lower) best_lower = std::max(best_lower, lb);
  int sum_cstar = 0;
  for (int c : cr.per_vertex) sum_cstar += c;
  double upper_cstar = 2.0 * std::sqrt(static_cast<double>(sum_cstar));
  double upper_clique =
      2.0 * std::sqrt(static_cast<double>(cr.omega) * g.vertex_count());
  double sqrt_l = std::sqrt(std::max(1, g.vertex_count()));

  results["walk_lower_bounds"] = lower;
  results["compression_estimate"] = compression;
  results["compression_radius"] = radius;
  results["certified_lower"] = best_lower;
  results["upper_sum_cstar"] = upper_cstar;
  results["upper_clique"] = upper_clique;
  results["normalized"] = {{"certified_lower", best_lower / sqrt_l},
                           {"sharp_upper", 2.0 * std::sqrt(double(cr.omega))}};
  BoundReport bracket =
      make_bound_report("lower-vs-upper-bracket", best_lower, upper_cstar);
  results["bracket"] = bound_json(bracket);
  if (!bracket.holds) falsifications.push_back(bound_json(bracket));

  csv.header = {"quantity", "value"};
  for (std::size_t i = 0; i < lower.size(); ++i)
    csv.rows.push_back({"walk_lower_p" + std::to_string(i + 1),
                        std::to_string(lower[i])});
  csv.rows.push_back({"compression_estimate", std::to_string(compression)});
  csv.rows.push_back({"upper_sum_cstar", std::to_string(upper_cstar)});
  csv.rows.push_back({"upper_clique", std::to_string(upper_clique)});
}

void run_bijection_verify(const ExperimentConfig& config, const SimpleGraph& g,
                          nlohmann::json& results,
                          nlohmann::json& falsifications, CsvTable& csv) {
  csv.header = {"p", "pi_count", "walk_count", "ok"};
  results["rows"] = nlohmann::json::array();
  for (int p = 1; p <= config.p_max; ++p) {
    BijectionCheck check = verify_bijection(g, p);
    results["rows"].push_back({{"p", p},
                               {"pi_count", dec(check.pi_count)},
                               {"walk_count", dec(check.walk_count)},
                               {"all_valid", check.all_valid},
                               {"injective", check.injective},
                               {"roundtrip_identity", check.roundtrip_identity},
                               {"length_rule", check.length_rule},
                               {"counts_match", check.counts_match}});
    csv.rows.push_back({std::to_string(p), dec(check.pi_count),
                        dec(check.walk_count), check.ok() ? "true" : "false"});
    if (!check.ok())
      falsifications.push_back({{"which", "bijection"},
                                {"p", p},
                                {"pi_count", dec(check.pi_count)},
                                {"walk_count", dec(check.walk_count)}});
  }
}

void run_khintchine_verify(const ExperimentConfig& config,
                           const SimpleGraph& g, nlohmann::json& results,
                           nlohmann::json& falsifications, CsvTable& csv) {
  std::mt19937 rng(config.seed);
  csv.header = {"p", "trials", "min_slack", "all_hold"};
  results["rows"] = nlohmann::json::array();
  for (int p = 1; p <= config.p_max; ++p) {
    double min_slack = std::numeric_limits<double>::infinity();
    bool all_hold = true;
    nlohmann::json worst;
    for (int t = 0; t < config.trials; ++t) {
      CoefficientVector alpha = random_dyadic_alpha(g.vertex_count(), rng);
      BoundReport rep = check_scalar_khintchine(g, p, alpha);
      if (rep.slack < min_slack) {
        min_slack = rep.slack;
        worst = bound_json(rep);
      }
      if (!rep.holds) {
        all_hold = false;
        falsifications.push_back(bound_json(rep));
      }
    }
    results["rows"].push_back({{"p", p},
                               {"trials", config.trials},
                               {"min_slack", min_slack},
                               {"worst", worst},
                               {"all_hold", all_hold}});
    csv.rows.push_back({std::to_string(p), std::to_string(config.trials),
                        std::to_string(min_slack),
                        all_hold ? "true" : "false"});
  }
}

void run_fock(const ExperimentConfig& config, const SimpleGraph& g,
              nlohmann::json& results, nlohmann::json& falsifications,
              CsvTable& csv) {
  int radius = auto_radius(config, g);
  FockBasis basis = build_fock_basis(g, radius);
  results["dim"] = basis.dim();
  results["radius"] = radius;
  SparseSymOperator sum = weighted_semicircle_sum(basis);
  csv.header = {"p", "vacuum_moment", "partition_moment", "agrees"};
  results["rows"] = nlohmann::json::array();
  int p_cap = std::min(config.p_max, radius);
  for (int p = 1; p <= p_cap; ++p) {
    BigInt vac = vacuum_moment_exact(sum, 2 * p, basis);
    BigInt mom = moment_unweighted(g, p);
    bool agrees = vac == mom;
    results["rows"].push_back({{"p", p},
                               {"vacuum_moment", dec(vac)},
                               {"partition_moment", dec(mom)},
                               {"agrees", agrees}});
    csv.rows.push_back({std::to_string(p), dec(vac), dec(mom),
                        agrees ? "true" : "false"});
    if (!agrees)
      falsifications.push_back({{"which", "vacuum-vs-partition-moment"},
                                {"p", p},
                                {"vacuum", dec(vac)},
                                {"partition", dec(mom)}});
  }
  int omega = clique_number(g);
  double l_norm = operator_norm(number_like_operator(basis), config.tol);
  bool radius_sufficient = radius >= omega;
  bool l_norm_ok = !radius_sufficient || l_norm == omega;
  results["number_operator_norm"] = l_norm;
  results["omega"] = omega;
  results["radius_sufficient"] = radius_sufficient;
  results["number_norm_equals_omega"] = l_norm_ok;
  if (!l_norm_ok)
    falsifications.push_back({{"which", "number-operator-norm"},
                              {"norm", l_norm},
                              {"omega", omega}});
  results["sum_norm_estimate"] = operator_norm(sum, config.tol);
}

void run_bounds(const ExperimentConfig& config, const SimpleGraph& g,
                nlohmann::json& results, nlohmann::json& falsifications,
                CsvTable& csv) {
  CliqueReport cr = clique_report(g);
  results["omega"] = cr.omega;
  results["clique_witness"] = cr.witness;
  results["c_star"] = cr.per_vertex;
  results["chromatic_number"] = chromatic_number(g);
  double lambda1 = largest_adjacency_eigenvalue(g);
  results["lambda1"] = lambda1;
  auto bounds = suboptimal_bounds(g);
  results["norm_upper_bounds"] = bounds;
  std::vector<double> lower = spectral_lower_bounds(g, config.p_max);
  double sqrt_l = std::sqrt(std::max(1, g.vertex_count()));
  double best_lower = 0;
  for (double lb : lower) best_lower = std::max(best_lower, lb / sqrt_l);
  results["normalized_certified_lower"] = best_lower;
  BoundReport bracket = make_bound_report("normalized-lower-vs-sharp",
                                          best_lower, bounds["sharp_clique"]);
  results["bracket"] = bound_json(bracket);
  if (!bracket.holds) falsifications.push_back(bound_json(bracket));
  // omega <= lambda1 + 1 cross-check
  BoundReport eigen = make_bound_report("clique-vs-eigenvalue",
                                        static_cast<double>(cr.omega),
                                        lambda1 + 1.0);
  results["clique_vs_eigenvalue"] = bound_json(eigen);
  if (!eigen.holds) falsifications.push_back(bound_json(eigen));

  csv.header = {"bound", "value"};
  for (const auto& [k, v] : bounds) csv.rows.push_back({k, std::to_string(v)});
  csv.rows.push_back({"normalized_certified_lower", std::to_string(best_lower)});
}

void run_sweep(const ExperimentConfig& config, nlohmann::json& results,
               nlohmann::json& falsifications, CsvTable& csv) {
  if (config.L < 1 || config.omega < 1)
    throw std::invalid_argument("extremal-sweep needs --L and --omega");
  SweepTable table = extremal_sweep(config.L, config.omega, config.p_max);
  results["L"] = table.L;
  results["omega"] = table.omega;
  results["graph_count"] = table.rows.size();
  results["turan_mask"] = table.turan_mask;
  results["minimizer_mask"] = table.minimizer_mask;
  results["turan_attains_max"] = table.turan_attains_max;
  results["minimizer_attains_min"] = table.minimizer_attains_min;
  csv.header = {"edge_mask"};
  for (int p = 1; p <= table.p_max; ++p) {
    csv.header.push_back("moment_p" + std::to_string(p));
    csv.header.push_back("normalized_p" + std::to_string(p));
    csv.header.push_back("norm_lower_p" + std::to_string(p));
  }
  results["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json jrow{{"edge_mask", row.edge_mask}};
    std::vector<std::string> crow{std::to_string(row.edge_mask)};
    for (int p = 1; p <= table.p_max; ++p) {
      std::size_t k = static_cast<std::size_t>(p) - 1;
      jrow["moment_p" + std::to_string(p)] = dec(row.moments[k]);
      jrow["normalized_p" + std::to_string(p)] = dec(row.normalized[k]);
      jrow["norm_lower_p" + std::to_string(p)] = row.norm_lower[k];
      crow.push_back(dec(row.moments[k]));
      crow.push_back(dec(row.normalized[k]));
      crow.push_back(std::to_string(row.norm_lower[k]));
    }
    results["rows"].push_back(std::move(jrow));
    csv.rows.push_back(std::move(crow));
  }
  (void)falsifications;
}

}  // namespace

nlohmann::json config_to_json(const ExperimentConfig& config) {
  return {{"command", config.command},
          {"graph_source", config.graph_source},
          {"p_max", config.p_max},
          {"radius", config.radius},
          {"tol", config.tol},
          {"seed", config.seed},
          {"trials", config.trials},
          {"L", config.L},
          {"omega", config.omega},
          {"output_path", config.output_path},
          {"format", config.format}};
}

RunReport run(const ExperimentConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json falsifications = nlohmann::json::array();
  CsvTable csv;

  const bool needs_graph = config.command != "extremal-sweep";
  SimpleGraph g;
  if (needs_graph) g = graph_from_spec(config.graph_source);

  if (config.command == "moment")
    run_moment(config, g, results, falsifications, csv);
  else if (config.command == "walks")
    run_walks(config, g, results, csv);
  else if (config.command == "norm")
    run_norm(config, g, results, falsifications, csv);
  else if (config.command == "bijection-verify")
    run_bijection_verify(config, g, results, falsifications, csv);
  else if (config.command == "khintchine-verify")
    run_khintchine_verify(config, g, results, falsifications, csv);
  else if (config.command == "fock")
    run_fock(config, g, results, falsifications, csv);
  else if (config.command == "bounds")
    run_bounds(config, g, results, falsifications, csv);
  else if (config.command == "extremal-sweep")
    run_sweep(config, results, falsifications, csv);
  else
    throw std::invalid_argument("unknown command: " + config.command);

  auto t1 = std::chrono::steady_clock::now();
  RunReport out;
  out.report = {{"schema", kReportSchema},
                {"version", kVersion},
                {"config", config_to_json(config)},
                {"results", results},
                {"falsifications", falsifications}};
  out.report["timings"] = {{"total_ms",
                            std::chrono::duration<double, std::milli>(t1 - t0).count()}};
  out.csv = csv.render();
  out.falsification_count = static_cast<int>(falsifications.size());

  if (!config.output_path.empty()) {
    if (config.format == "csv")
      write_atomic(config.output_path, out.csv);
    else
      write_atomic(config.output_path, out.report.dump(2) + "\n");
  }
  return out;
}

}  // namespace gsemi
