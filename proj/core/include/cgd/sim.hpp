// Replicate-sweep simulation harness: one graph and outcome draw, then
// repeated design draws with per-design estimator statistics, interval
// coverage, and variance-bound diagnostics.
#ifndef CGD_SIM_HPP
#define CGD_SIM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cgd/estimand.hpp"
#include "cgd/estimator.hpp"
#include "cgd/graph.hpp"

namespace cgd {

class RngStream;

enum class OutcomeModel { LargeOutliers, MediumOutliers, Fixed };

// Large outliers: y0_i drawn N(1,1), y1_i drawn N(2,1) scaled by
// sqrt(deg_G(i)). Medium outliers scale by deg_G(i)^{1/4} instead. Two
// normal variates are consumed per unit in vertex order.
OutcomeTable gen_outcomes(const Graph& g, OutcomeModel model, RngStream& rng);

struct SimConfig {
  Graph graph;
  Estimand estimand;
  bool run_cgd = true;
  bool run_bernoulli = false;
  bool run_independent_set = false;
  OutcomeModel model = OutcomeModel::LargeOutliers;
  OutcomeTable fixed_outcomes;  // consumed when model == Fixed
  int replicates = 1000;
  int mc_prob_draws = 10000;
  double alpha = 0.05;
  double r = 2.0;
  double bernoulli_p = 0.5;
  std::uint64_t seed = 0;
};

// One output row per (design, estimator) pair. Metrics that do not apply
// to a pair are NaN; NaN serializes to null in JSON and "nan" in CSV.
struct SimRow {
  std::string design;
  std::string estimator;
  int n = 0;
  double lambda_h = 0.0;
  double dmax_h = 0.0;
  double lambda_v = 0.0;
  double mean_tau_hat = 0.0;
  double true_tau = 0.0;
  double emp_var = 0.0;
  double exact_var = 0.0;
  double vb = 0.0;
  double coverage_cheb = 0.0;
  double width_cheb = 0.0;
  double coverage_wald = 0.0;
  double width_wald = 0.0;
  double vbhat_ratio_var = 0.0;
  double mse = 0.0;  // JSON only, not part of the CSV schema
  long long replicates = 0;
  long long dropped = 0;
};

struct SimReport {
  std::vector<SimRow> rows;
};

// Runs the sweep: the conflict graph design contributes a modified and a
// standard estimator row; each baseline contributes a standard row.
// Standard-estimator exposure probabilities come from exact enumeration
// when n <= 12 (conflict graph design only) and from mc_prob_draws
// auxiliary draws otherwise. Replicates hitting a zero recorded
// probability are dropped and counted.
SimReport run_simulation(const SimConfig& cfg);

extern const char* const kSimCsvHeader;

void emit_csv(const SimReport& report, std::ostream& out);
nlohmann::json sim_report_to_json(const SimReport& report);
SimReport sim_report_from_json(const nlohmann::json& j);

// Writes the report to a file in the requested format ("csv" or "json").
void emit(const SimReport& report, const std::string& format, const std::string& path);

// The outcome pattern of the slow-rate construction: y0 = sqrt(block size)
// on the secondary hubs, zero elsewhere, y1 identically zero.
OutcomeTable hub_cliques_outcomes(const HubCliquesShape& shape);

}  // namespace cgd

#endif  // CGD_SIM_HPP
