#include "cgd/sim.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "cgd/design.hpp"
#include "cgd/mathutil.hpp"
#include "cgd/oracle.hpp"
#include "cgd/ordering.hpp"
#include "cgd/rng.hpp"

namespace cgd {

namespace {

constexpr std::uint64_t kOutcomeTag = (std::uint64_t{1} << 63) | 2;
constexpr std::uint64_t kProbTagBase = std::uint64_t{1} << 62;

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

double series_mean(const std::vector<double>& v) {
  if (v.empty()) return nan_value();
  return pairwise_sum(v) / static_cast<double>(v.size());
}

double series_variance(const std::vector<double>& v) {
  if (v.size() < 2) return nan_value();
  const double mean = series_mean(v);
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - mean) * (v[i] - mean);
  return pairwise_sum(sq) / static_cast<double>(v.size() - 1);
}

double series_mse(const std::vector<double>& v, double target) {
  if (v.empty()) return nan_value();
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - target) * (v[i] - target);
  return pairwise_sum(sq) / static_cast<double>(v.size());
}

}  // namespace

OutcomeTable gen_outcomes(const Graph& g, OutcomeModel model, RngStream& rng) {
  double exponent = 0.0;
  switch (model) {
    case OutcomeModel::LargeOutliers:
      exponent = 0.5;
      break;
    case OutcomeModel::MediumOutliers:
      exponent = 0.25;
      break;
    case OutcomeModel::Fixed:
      throw std::invalid_argument("gen_outcomes: fixed model carries its own table");
  }
  OutcomeTable outcomes;
  outcomes.y0.resize(g.n);
  outcomes.y1.resize(g.n);
  for (Vertex i = 0; i < g.n; ++i) {
    const double a1 = rng.normal(1.0, 1.0);
    const double a2 = rng.normal(2.0, 1.0);
    outcomes.y0[i] = a1;
    outcomes.y1[i] =
        a2 * std::pow(static_cast<double>(g.adj[i].size()), exponent);
  }
  return outcomes;
}

OutcomeTable hub_cliques_outcomes(const HubCliquesShape& shape) {
  OutcomeTable outcomes;
  outcomes.y0.assign(shape.total, 0.0);
  outcomes.y1.assign(shape.total, 0.0);
  for (Vertex v = shape.secondary_begin; v < shape.blocks_begin; ++v) {
    outcomes.y0[v] = std::sqrt(static_cast<double>(shape.block_size));
  }
  return outcomes;
}

SimReport run_simulation(const SimConfig& cfg) {
  const Graph& g = cfg.graph;
  if (g.n < 1) throw std::invalid_argument("run_simulation: empty graph");
  if (cfg.replicates < 1) throw std::invalid_argument("run_simulation: need replicates >= 1");
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) {
    throw std::invalid_argument("run_simulation: alpha must lie in (0, 1]");
  }
  if (cfg.mc_prob_draws < 1) {
    throw std::invalid_argument("run_simulation: need mc_prob_draws >= 1");
  }

  OutcomeTable outcomes;
  if (cfg.model == OutcomeModel::Fixed) {
    outcomes = cfg.fixed_outcomes;
    if (static_cast<int>(outcomes.y1.size()) != g.n ||
        static_cast<int>(outcomes.y0.size()) != g.n) {
      throw std::invalid_argument("run_simulation: fixed outcome table length mismatch");
    }
  } else {
    RngStream outcome_rng(cfg.seed, kOutcomeTag);
    outcomes = gen_outcomes(g, cfg.model, outcome_rng);
  }
  const double true_tau = true_effect(outcomes);

  const Graph h = build_conflict_graph(g, cfg.estimand);
  const SpectralResult h_spec = largest_eigenvalue(h);
  const double lambda_h = h_spec.lambda;
  const double dmax_h = h.max_degree();
  const ContrastTable table = contrast_table(g, cfg.estimand);

  ImportanceOrdering ord;
  DesignParams params;
  double lamv = nan_value();
  double exact_var = nan_value();
  double vb = nan_value();
  ExposureProbs cgd_probs;
  if (cfg.run_cgd) {
    ord = eigenvector_ordering(h, h_spec);
    params.r = cfg.r;
    params.lambda = lambda_h;
    validate_params(params);
    {
      const VMatrix vmat = build_v_matrix(h, ord, params);
      exact_var = exact_variance_modified(outcomes, vmat);
      lamv = lambda_v(vmat).lambda;
    }
    vb = variance_bound(outcomes, lamv);
    if (g.n <= 12) {
      const OracleDistribution dist = enumerate_design(g, cfg.estimand, h, ord, params);
      cgd_probs = exact_exposure_probs(dist, g, cfg.estimand);
    } else {
      RngStream prob_rng(cfg.seed, kProbTagBase | 0);
      cgd_probs = mc_exposure_probs(
          table, cfg.mc_prob_draws,
          [&](RngStream& rs) { return sample(table, h, ord, params, rs).z; },
          prob_rng);
    }
  }
  ExposureProbs bern_probs;
  if (cfg.run_bernoulli) {
    RngStream prob_rng(cfg.seed, kProbTagBase | 1);
    bern_probs = mc_exposure_probs(
        table, cfg.mc_prob_draws,
        [&](RngStream& rs) { return bernoulli_design(g.n, cfg.bernoulli_p, rs); },
        prob_rng);
  }
  ExposureProbs is_probs;
  if (cfg.run_independent_set) {
    RngStream prob_rng(cfg.seed, kProbTagBase | 2);
    is_probs = mc_exposure_probs(
        table, cfg.mc_prob_draws,
        [&](RngStream& rs) { return independent_set_design(g, rs); }, prob_rng);
  }

  std::vector<double> mod_tau, mod_ratio, cheb_widths, wald_widths;
  std::vector<double> cgd_std_tau, bern_tau, is_tau;
  long long covered_cheb = 0, covered_wald = 0;
  long long cgd_std_dropped = 0, bern_dropped = 0, is_dropped = 0;

  for (int rep = 0; rep < cfg.replicates; ++rep) {
    RngStream rep_stream(cfg.seed, static_cast<std::uint64_t>(rep));
    if (cfg.run_cgd) {
      RngStream draw_rng = rep_stream.substream(0);
      const DesignDraw draw = sample(table, h, ord, params, draw_rng);
      const double tau_hat = modified_ht(outcomes, draw, ord, params);
      const double vb_hat = vb_estimator(outcomes, draw, ord, params, lamv);
      mod_tau.push_back(tau_hat);
      const auto ci_cheb = chebyshev_interval(tau_hat, vb_hat, cfg.alpha);
      const auto ci_wald = wald_interval(tau_hat, vb_hat, cfg.alpha);
      if (true_tau >= ci_cheb.first && true_tau <= ci_cheb.second) ++covered_cheb;
      if (true_tau >= ci_wald.first && true_tau <= ci_wald.second) ++covered_wald;
      cheb_widths.push_back(ci_cheb.second - ci_cheb.first);
      wald_widths.push_back(ci_wald.second - ci_wald.first);
      if (vb > 0.0) mod_ratio.push_back(vb_hat / vb);
      try {
        cgd_std_tau.push_back(standard_ht(outcomes, table, draw.z, cgd_probs));
      } catch (const std::runtime_error&) {
        ++cgd_std_dropped;
      }
    }
    if (cfg.run_bernoulli) {
      RngStream draw_rng = rep_stream.substream(1);
      const std::vector<std::uint8_t> z =
          bernoulli_design(g.n, cfg.bernoulli_p, draw_rng);
      try {
        bern_tau.push_back(standard_ht(outcomes, table, z, bern_probs));
      } catch (const std::runtime_error&) {
        ++bern_dropped;
      }
    }
    if (cfg.run_independent_set) {
      RngStream draw_rng = rep_stream.substream(2);
      const std::vector<std::uint8_t> z = independent_set_design(g, draw_rng);
      try {
        is_tau.push_back(standard_ht(outcomes, table, z, is_probs));
      } catch (const std::runtime_error&) {
        ++is_dropped;
      }
    }
  }

  SimReport report;
  auto base_row = [&](const std::string& design, const std::string& estimator) {
    SimRow row;
    row.design = design;
    row.estimator = estimator;
    row.n = g.n;
    row.lambda_h = lambda_h;
    row.dmax_h = dmax_h;
    row.lambda_v = nan_value();
    row.true_tau = true_tau;
    row.exact_var = nan_value();
    row.vb = nan_value();
    row.coverage_cheb = nan_value();
    row.width_cheb = nan_value();
    row.coverage_wald = nan_value();
    row.width_wald = nan_value();
    row.vbhat_ratio_var = nan_value();
    row.replicates = cfg.replicates;
    row.dropped = 0;
    return row;
  };

  if (cfg.run_cgd) {
    SimRow row = base_row("cgd", "modified");
    row.lambda_v = lamv;
    row.mean_tau_hat = series_mean(mod_tau);
    row.emp_var = series_variance(mod_tau);
    row.mse = series_mse(mod_tau, true_tau);
    row.exact_var = exact_var;
    row.vb = vb;
    row.coverage_cheb = static_cast<double>(covered_cheb) / cfg.replicates;
    row.coverage_wald = static_cast<double>(covered_wald) / cfg.replicates;
    row.width_cheb = series_mean(cheb_widths);
    row.width_wald = series_mean(wald_widths);
    row.vbhat_ratio_var = series_variance(mod_ratio);
    report.rows.push_back(std::move(row));

    SimRow srow = base_row("cgd", "standard");
    srow.lambda_v = lamv;
    srow.mean_tau_hat = series_mean(cgd_std_tau);
    srow.emp_var = series_variance(cgd_std_tau);
    srow.mse = series_mse(cgd_std_tau, true_tau);
    srow.dropped = cgd_std_dropped;
    report.rows.push_back(std::move(srow));
  }
  if (cfg.run_bernoulli) {
    SimRow row = base_row("bernoulli", "standard");
    row.mean_tau_hat = series_mean(bern_tau);
    row.emp_var = series_variance(bern_tau);
    row.mse = series_mse(bern_tau, true_tau);
    row.dropped = bern_dropped;
    report.rows.push_back(std::move(row));
  }
  if (cfg.run_independent_set) {
    SimRow row = base_row("independent_set", "standard");
    row.mean_tau_hat = series_mean(is_tau);
    row.emp_var = series_variance(is_tau);
    row.mse = series_mse(is_tau, true_tau);
    row.dropped = is_dropped;
    report.rows.push_back(std::move(row));
  }
  return report;
}

const char* const kSimCsvHeader =
    "design,estimator,n,lambda_H,dmax_H,lambda_V,mean_tau_hat,true_tau,emp_var,"
    "exact_var,vb,coverage_cheb,width_cheb,coverage_wald,width_wald,"
    "vbhat_ratio_var,replicates,dropped";

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double json_double(const nlohmann::json& j) {
  if (j.is_null()) return nan_value();
  return j.get<double>();
}

}  // namespace

void emit_csv(const SimReport& report, std::ostream& out) {
  out << kSimCsvHeader << '\n';
  for (const SimRow& row : report.rows) {
    out << row.design << ',' << row.estimator << ',' << row.n << ','
        << format_double(row.lambda_h) << ',' << format_double(row.dmax_h) << ','
        << format_double(row.lambda_v) << ',' << format_double(row.mean_tau_hat)
        << ',' << format_double(row.true_tau) << ',' << format_double(row.emp_var)
        << ',' << format_double(row.exact_var) << ',' << format_double(row.vb)
        << ',' << format_double(row.coverage_cheb) << ','
        << format_double(row.width_cheb) << ',' << format_double(row.coverage_wald)
        << ',' << format_double(row.width_wald) << ','
        << format_double(row.vbhat_ratio_var) << ',' << row.replicates << ','
        << row.dropped << '\n';
  }
}

nlohmann::json sim_report_to_json(const SimReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SimRow& row : report.rows) {
    nlohmann::json j;
    j["design"] = row.design;
    j["estimator"] = row.estimator;
    j["n"] = row.n;
    j["lambda_H"] = row.lambda_h;
    j["dmax_H"] = row.dmax_h;
    j["lambda_V"] = row.lambda_v;
    j["mean_tau_hat"] = row.mean_tau_hat;
    j["true_tau"] = row.true_tau;
    j["emp_var"] = row.emp_var;
    j["exact_var"] = row.exact_var;
    j["vb"] = row.vb;
    j["coverage_cheb"] = row.coverage_cheb;
    j["width_cheb"] = row.width_cheb;
    j["coverage_wald"] = row.coverage_wald;
    j["width_wald"] = row.width_wald;
    j["vbhat_ratio_var"] = row.vbhat_ratio_var;
    j["mse"] = row.mse;
    j["replicates"] = row.replicates;
    j["dropped"] = row.dropped;
    rows.push_back(std::move(j));
  }
  return nlohmann::json{{"rows", std::move(rows)}};
}

SimReport sim_report_from_json(const nlohmann::json& j) {
  SimReport report;
  for (const auto& r : j.at("rows")) {
    SimRow row;
    row.design = r.at("design").get<std::string>();
    row.estimator = r.at("estimator").get<std::string>();
    row.n = r.at("n").get<int>();
    row.lambda_h = json_double(r.at("lambda_H"));
    row.dmax_h = json_double(r.at("dmax_H"));
    row.lambda_v = json_double(r.at("lambda_V"));
    row.mean_tau_hat = json_double(r.at("mean_tau_hat"));
    row.true_tau = json_double(r.at("true_tau"));
    row.emp_var = json_double(r.at("emp_var"));
    row.exact_var = json_double(r.at("exact_var"));
    row.vb = json_double(r.at("vb"));
    row.coverage_cheb = json_double(r.at("coverage_cheb"));
    row.width_cheb = json_double(r.at("width_cheb"));
    row.coverage_wald = json_double(r.at("coverage_wald"));
    row.width_wald = json_double(r.at("width_wald"));
    row.vbhat_ratio_var = json_double(r.at("vbhat_ratio_var"));
    row.mse = json_double(r.at("mse"));
    row.replicates = r.at("replicates").get<long long>();
    row.dropped = r.at("dropped").get<long long>();
    report.rows.push_back(std::move(row));
  }
  return report;
}

void emit(const SimReport& report, const std::string& format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit: cannot open " + path);
  if (format == "csv") {
    emit_csv(report, out);
  } else if (format == "json") {
    out << sim_report_to_json(report).dump(2) << '\n';
  } else {
    throw std::invalid_argument("emit: format must be csv or json");
  }
  if (!out) throw std::runtime_error("emit: write failed for " + path);
}

}  // namespace cgd
