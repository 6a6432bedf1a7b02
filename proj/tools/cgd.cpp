// Command-line front end: graph generation, conflict-graph and ordering
// inspection, design sampling, probability queries, estimation from draw
// streams, simulation sweeps, and the exactness battery.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cgd/design.hpp"
#include "cgd/estimand.hpp"
#include "cgd/estimator.hpp"
#include "cgd/graph.hpp"
#include "cgd/mathutil.hpp"
#include "cgd/oracle.hpp"
#include "cgd/ordering.hpp"
#include "cgd/rng.hpp"
#include "cgd/sim.hpp"

namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

struct Prepared {
  cgd::Graph g;
  cgd::Estimand est;
  cgd::Graph h;
  cgd::SpectralResult h_spec;
  cgd::ImportanceOrdering ord;
  cgd::DesignParams params;
  cgd::ContrastTable table;
};

cgd::ImportanceOrdering make_ordering(const cgd::Graph& h,
                                      const cgd::SpectralResult& spec,
                                      const std::string& method) {
  if (method == "eigenvector") return cgd::eigenvector_ordering(h, spec);
  if (method == "sequential") return cgd::sequential_degree_ordering(h);
  throw std::invalid_argument("ordering method must be eigenvector or sequential");
}

Prepared prepare(const std::string& graph_file, const std::string& estimand_arg,
                 double r, const std::string& ordering_method) {
  Prepared p;
  p.g = cgd::read_edge_list_file(graph_file);
  p.est = cgd::parse_estimand_arg(estimand_arg);
  p.h = cgd::build_conflict_graph(p.g, p.est);
  p.h_spec = cgd::largest_eigenvalue(p.h);
  p.ord = make_ordering(p.h, p.h_spec, ordering_method);
  p.params.r = r;
  p.params.lambda = p.h_spec.lambda;
  cgd::validate_params(p.params);
  p.table = cgd::contrast_table(p.g, p.est);
  return p;
}

std::string desire_string(const std::vector<cgd::Desire>& u) {
  std::string s;
  s.reserve(u.size());
  for (cgd::Desire d : u) {
    s.push_back(d == cgd::Desire::E1 ? '1' : (d == cgd::Desire::E0 ? '0' : '*'));
  }
  return s;
}

std::string bit_string(const std::vector<std::uint8_t>& z) {
  std::string s;
  s.reserve(z.size());
  for (std::uint8_t b : z) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<cgd::Desire> parse_desires(const std::string& s) {
  std::vector<cgd::Desire> u;
  u.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '1':
        u.push_back(cgd::Desire::E1);
        break;
      case '0':
        u.push_back(cgd::Desire::E0);
        break;
      case '*':
        u.push_back(cgd::Desire::Star);
        break;
      default:
        throw std::invalid_argument(std::string("draw line: bad desire character '") +
                                    c + "'");
    }
  }
  return u;
}

cgd::OutcomeTable read_outcomes_csv(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open outcomes file: " + path);
  cgd::OutcomeTable outcomes;
  outcomes.y1.assign(n, 0.0);
  outcomes.y0.assign(n, 0.0);
  std::vector<std::uint8_t> seen(n, 0);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream row(line);
    long long unit = 0;
    double y1 = 0.0, y0 = 0.0;
    if (!(row >> unit >> y1 >> y0)) {
      if (first) {
        first = false;  // tolerate a header line
        continue;
      }
      throw std::invalid_argument("outcomes file: bad row \"" + line + "\"");
    }
    first = false;
    if (unit < 0 || unit >= n) {
      throw std::invalid_argument("outcomes file: unit " + std::to_string(unit) +
                                  " out of range");
    }
    if (seen[unit]) {
      throw std::invalid_argument("outcomes file: duplicate unit " +
                                  std::to_string(unit));
    }
    seen[unit] = 1;
    outcomes.y1[unit] = y1;
    outcomes.y0[unit] = y0;
  }
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) {
      throw std::invalid_argument("outcomes file: missing unit " + std::to_string(i));
    }
  }
  return outcomes;
}

int run_gen_graph(const std::string& type, int n, int m, double r_exp,
                  std::uint64_t seed, const std::string& out_path) {
  cgd::Graph g;
  if (type == "pa") {
    cgd::RngStream rng(seed, (std::uint64_t{1} << 63) | 1);
    g = cgd::preferential_attachment(n, m, r_exp, rng);
  } else if (type == "star") {
    g = cgd::star(n);
  } else if (type == "path") {
    g = cgd::path(n);
  } else if (type == "clique") {
    g = cgd::clique(n);
  } else if (type == "hub-cliques") {
    g = cgd::hub_cliques(n);
  } else if (type == "clique-of-cliques") {
    g = cgd::clique_of_cliques(n);
  } else {
    throw std::invalid_argument("gen-graph: unknown type \"" + type + "\"");
  }
  if (out_path.empty()) {
    cgd::write_edge_list(g, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    cgd::write_edge_list(g, out);
  }
  return 0;
}

int run_oracle_check() {
  struct Fixture {
    std::string name;
    cgd::Graph g;
    cgd::Estimand est;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({"triangle-direct", cgd::clique(3), cgd::direct_effect_estimand()});
  fixtures.push_back({"path4-gate", cgd::path(4), cgd::gate_estimand()});
  fixtures.push_back({"star5-direct", cgd::star(5), cgd::direct_effect_estimand()});
  {
    cgd::Graph p4 = cgd::path(4);
    std::vector<std::vector<cgd::Vertex>> seeds = {{1}, {0}, {3}, {2}};
    fixtures.push_back({"path4-spillover", p4, cgd::spillover_estimand(seeds)});
  }
  fixtures.push_back(
      {"edgeless3-direct",
       cgd::from_edge_list(3, {}),
       cgd::direct_effect_estimand()});

  json checks = json::array();
  bool all_pass = true;
  for (const Fixture& fx : fixtures) {
    const cgd::Graph h = cgd::build_conflict_graph(fx.g, fx.est);
    const cgd::SpectralResult spec = cgd::largest_eigenvalue(h);
    const cgd::ImportanceOrdering ord = cgd::eigenvector_ordering(h, spec);
    cgd::DesignParams params;
    params.lambda = spec.lambda;
    const cgd::OracleDistribution dist =
        cgd::enumerate_design(fx.g, fx.est, h, ord, params);
    const cgd::ContrastTable table = cgd::contrast_table(fx.g, fx.est);
    const int n = fx.g.n;

    double dev_total = 0.0;
    {
      cgd::Accumulator acc;
      for (const auto& atom : dist.atoms) acc.add(atom.prob);
      dev_total = std::fabs(acc.value() - 1.0);
    }

    double dev_prob = 0.0;
    for (cgd::Vertex i = 0; i < n; ++i) {
      for (int k = 0; k < 2; ++k) {
        const double exact = cgd::oracle_expectation(dist, [&](const cgd::OracleAtom& a) {
          return cgd::desired_event(i, k, a.u, ord) ? 1.0 : 0.0;
        });
        dev_prob = std::max(dev_prob,
                            std::fabs(exact - cgd::prob_single(i, k, ord, params)));
      }
    }

    double dev_cov = 0.0;
    for (cgd::Vertex i = 0; i < n; ++i) {
      for (cgd::Vertex j = 0; j < n; ++j) {
        for (int k = 0; k < 2; ++k) {
          for (int l = 0; l < 2; ++l) {
            const double pi = cgd::prob_single(i, k, ord, params);
            const double pj = cgd::prob_single(j, l, ord, params);
            const double exact = cgd::oracle_covariance(
                dist,
                [&](const cgd::OracleAtom& a) {
                  return (cgd::desired_event(i, k, a.u, ord) ? 1.0 : 0.0) / pi;
                },
                [&](const cgd::OracleAtom& a) {
                  return (cgd::desired_event(j, l, a.u, ord) ? 1.0 : 0.0) / pj;
                });
            dev_cov = std::max(
                dev_cov,
                std::fabs(exact - cgd::covariance_entry(i, k, j, l, h, ord, params)));
          }
        }
      }
    }

    cgd::OutcomeTable outcomes;
    cgd::RngStream outcome_rng(7, 11);
    outcomes.y1.resize(n);
    outcomes.y0.resize(n);
    for (int i = 0; i < n; ++i) {
      outcomes.y1[i] = 10.0 * outcome_rng.uniform01() - 5.0;
      outcomes.y0[i] = 10.0 * outcome_rng.uniform01() - 5.0;
    }
    const double tau = cgd::true_effect(outcomes);
    const double dev_unbiased =
        std::fabs(cgd::oracle_expectation(dist, [&](const cgd::OracleAtom& a) {
          cgd::DesignDraw draw{a.u, a.z};
          return cgd::modified_ht(outcomes, draw, ord, params);
        }) - tau);

    const double lamv = cgd::cached_lambda_v(h, ord, params).lambda;
    const double vb = cgd::variance_bound(outcomes, lamv);
    const double dev_vbhat =
        std::fabs(cgd::oracle_expectation(dist, [&](const cgd::OracleAtom& a) {
          cgd::DesignDraw draw{a.u, a.z};
          return cgd::vb_estimator(outcomes, draw, ord, params, lamv);
        }) - vb);

    const cgd::ExposureProbs probs = cgd::exact_exposure_probs(dist, fx.g, fx.est);
    const double dev_standard =
        std::fabs(cgd::oracle_expectation(dist, [&](const cgd::OracleAtom& a) {
          return cgd::standard_ht(outcomes, table, a.z, probs);
        }) - tau);

    long long realize_violations = 0;
    for (const auto& atom : dist.atoms) {
      for (cgd::Vertex i = 0; i < n; ++i) {
        for (int k = 0; k < 2; ++k) {
          if (!cgd::desired_event(i, k, atom.u, ord)) continue;
          const cgd::Exposure realized = cgd::exposure_of(fx.g, i, atom.z);
          const cgd::Exposure& want = k == 1 ? table.e1[i] : table.e0[i];
          if (!(realized == want)) ++realize_violations;
        }
      }
    }

    const bool pass = dev_total <= 1e-12 && dev_prob <= 1e-12 && dev_cov <= 1e-10 &&
                      dev_unbiased <= 1e-12 && dev_vbhat <= 1e-12 &&
                      dev_standard <= 1e-12 && realize_violations == 0;
    all_pass = all_pass && pass;
    checks.push_back({{"fixture", fx.name},
                      {"prob_mass_deviation", dev_total},
                      {"prob_formula_deviation", dev_prob},
                      {"covariance_deviation", dev_cov},
                      {"unbiasedness_deviation", dev_unbiased},
                      {"vb_estimator_deviation", dev_vbhat},
                      {"standard_ht_deviation", dev_standard},
                      {"realization_violations", realize_violations},
                      {"pass", pass}});
  }
  json report{{"checks", checks}, {"pass", all_pass}};
  std::cout << report.dump(2) << '\n';
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict graph design toolkit"};
  app.fallthrough();
  std::uint64_t seed = 0;
  std::string format = "csv";
  app.add_option("--seed", seed, "RNG seed (default 0)");
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.require_subcommand(1);

  // gen-graph
  auto* gen = app.add_subcommand("gen-graph", "Generate a graph and print its edge list");
  std::string gen_type = "pa";
  int gen_n = 100, gen_m = 4;
  double gen_r_exp = 1.0;
  std::string gen_out;
  gen->add_option("--type", gen_type,
                  "pa, star, path, clique, hub-cliques, clique-of-cliques")
      ->required();
  gen->add_option("--n", gen_n, "Vertex count (block count for hub-cliques)")->required();
  gen->add_option("--m", gen_m, "Edges per arrival (pa only)");
  gen->add_option("--r-exp", gen_r_exp, "Degree exponent (pa only)");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // conflict-graph
  auto* conf = app.add_subcommand("conflict-graph",
                                  "Print the conflict graph's edge list");
  std::string cg_graph, cg_est = "direct", cg_out;
  conf->add_option("--graph", cg_graph, "Input edge-list file")->required();
  conf->add_option("--estimand", cg_est, "gate, direct, or a JSON estimand file");
  conf->add_option("--out", cg_out, "Output file (default stdout)");

  // ordering
  auto* ordc = app.add_subcommand("ordering",
                                  "Print an importance ordering as a JSON array");
  std::string ord_graph, ord_est = "direct", ord_method = "eigenvector";
  ordc->add_option("--graph", ord_graph, "Input edge-list file")->required();
  ordc->add_option("--estimand", ord_est, "gate, direct, or a JSON estimand file");
  ordc->add_option("--method", ord_method, "eigenvector or sequential")
      ->check(CLI::IsMember({"eigenvector", "sequential"}));

  // lambda
  auto* lam = app.add_subcommand("lambda",
                                 "Print the conflict graph's dominant eigenvalue");
  std::string lam_graph, lam_est = "direct";
  lam->add_option("--graph", lam_graph, "Input edge-list file")->required();
  lam->add_option("--estimand", lam_est, "gate, direct, or a JSON estimand file");

  // sample
  auto* samp = app.add_subcommand("sample", "Draw from the design; one line per draw");
  std::string sm_graph, sm_est = "direct", sm_method = "eigenvector";
  double sm_r = 2.0;
  int sm_draws = 1;
  samp->add_option("--graph", sm_graph, "Input edge-list file")->required();
  samp->add_option("--estimand", sm_est, "gate, direct, or a JSON estimand file");
  samp->add_option("--r", sm_r, "Sampling parameter (default 2)");
  samp->add_option("--draws", sm_draws, "Number of draws (default 1)");
  samp->add_option("--ordering", sm_method, "eigenvector or sequential")
      ->check(CLI::IsMember({"eigenvector", "sequential"}));

  // probs
  auto* prob = app.add_subcommand(
      "probs", "Closed-form event probabilities and indicator covariances");
  std::string pb_graph, pb_est = "direct", pb_method = "eigenvector";
  double pb_r = 2.0;
  int pb_unit = 0, pb_contrast = 1;
  int pb_unit2 = -1, pb_contrast2 = 1;
  bool pb_cov = false;
  prob->add_option("--graph", pb_graph, "Input edge-list file")->required();
  prob->add_option("--estimand", pb_est, "gate, direct, or a JSON estimand file");
  prob->add_option("--r", pb_r, "Sampling parameter (default 2)");
  prob->add_option("--unit", pb_unit, "Unit id")->required();
  prob->add_option("--contrast", pb_contrast, "Contrast index: 1 = e1, 0 = e0");
  prob->add_option("--unit2", pb_unit2, "Second unit id (pair query)");
  prob->add_option("--contrast2", pb_contrast2, "Second contrast index");
  prob->add_flag("--cov", pb_cov,
                 "Print the weighted-indicator covariance instead of a probability");
  prob->add_option("--ordering", pb_method, "eigenvector or sequential")
      ->check(CLI::IsMember({"eigenvector", "sequential"}));

  // estimate
  auto* est = app.add_subcommand(
      "estimate", "Estimate from a draw stream; one JSON report per draw line");
  std::string es_graph, es_est = "direct", es_method = "eigenvector";
  std::string es_outcomes, es_draws_file;
  double es_r = 2.0, es_alpha = 0.05;
  est->add_option("--graph", es_graph, "Input edge-list file")->required();
  est->add_option("--estimand", es_est, "gate, direct, or a JSON estimand file");
  est->add_option("--outcomes", es_outcomes, "CSV file with columns unit,y1,y0")
      ->required();
  est->add_option("--draws-file", es_draws_file,
                  "Draw lines as emitted by sample (default stdin)");
  est->add_option("--r", es_r, "Sampling parameter (default 2)");
  est->add_option("--alpha", es_alpha, "Interval level (default 0.05)");
  est->add_option("--ordering", es_method, "eigenvector or sequential")
      ->check(CLI::IsMember({"eigenvector", "sequential"}));

  // simulate
  auto* simc = app.add_subcommand("simulate", "Replicate sweep over designs");
  std::string si_graph, si_gen, si_est = "direct", si_model = "large";
  std::string si_designs = "cgd", si_out;
  int si_n = 500, si_m = 4, si_replicates = 1000, si_mc = 10000;
  double si_r = 2.0, si_r_exp = 1.0, si_alpha = 0.05, si_bern_p = 0.5;
  simc->add_option("--graph", si_graph, "Input edge-list file");
  simc->add_option("--gen", si_gen,
                   "Generator: pa, star, path, clique, hub-cliques, clique-of-cliques");
  simc->add_option("--n", si_n, "Vertex count for --gen");
  simc->add_option("--m", si_m, "Edges per arrival (pa only)");
  simc->add_option("--r-exp", si_r_exp, "Degree exponent (pa only)");
  simc->add_option("--estimand", si_est, "gate, direct, or a JSON estimand file");
  simc->add_option("--designs", si_designs,
                   "Comma-separated subset of cgd,bernoulli,independent_set");
  simc->add_option("--model", si_model,
                   "large, medium, or a CSV outcome file (unit,y1,y0)");
  simc->add_option("--replicates", si_replicates, "Replicates (default 1000)");
  simc->add_option("--mc-prob-draws", si_mc,
                   "Auxiliary draws for exposure probabilities (default 10000)");
  simc->add_option("--alpha", si_alpha, "Interval level (default 0.05)");
  simc->add_option("--r", si_r, "Sampling parameter (default 2)");
  simc->add_option("--bernoulli-p", si_bern_p, "Bernoulli design probability");
  simc->add_option("--out", si_out, "Output file (default stdout)");

  // oracle-check
  app.add_subcommand("oracle-check",
                     "Run the exactness battery on built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      return run_gen_graph(gen_type, gen_n, gen_m, gen_r_exp, seed, gen_out);
    }
    if (conf->parsed()) {
      const cgd::Graph g = cgd::read_edge_list_file(cg_graph);
      const cgd::Estimand e = cgd::parse_estimand_arg(cg_est);
      const cgd::Graph h = cgd::build_conflict_graph(g, e);
      if (cg_out.empty()) {
        cgd::write_edge_list(h, std::cout);
      } else {
        std::ofstream out(cg_out);
        if (!out) throw std::runtime_error("cannot open output file: " + cg_out);
        cgd::write_edge_list(h, out);
      }
      return 0;
    }
    if (ordc->parsed()) {
      const cgd::Graph g = cgd::read_edge_list_file(ord_graph);
      const cgd::Estimand e = cgd::parse_estimand_arg(ord_est);
      const cgd::Graph h = cgd::build_conflict_graph(g, e);
      const cgd::SpectralResult spec = cgd::largest_eigenvalue(h);
      const cgd::ImportanceOrdering ord = make_ordering(h, spec, ord_method);
      std::cout << json(ord.order).dump() << '\n';
      return 0;
    }
    if (lam->parsed()) {
      const cgd::Graph g = cgd::read_edge_list_file(lam_graph);
      const cgd::Estimand e = cgd::parse_estimand_arg(lam_est);
      const cgd::Graph h = cgd::build_conflict_graph(g, e);
      const double lambda = cgd::largest_eigenvalue(h).lambda;
      if (format == "json") {
        std::cout << json{{"lambda", lambda}}.dump() << '\n';
      } else {
        std::cout << fmt(lambda) << '\n';
      }
      return 0;
    }
    if (samp->parsed()) {
      Prepared p = prepare(sm_graph, sm_est, sm_r, sm_method);
      if (sm_draws < 1) throw std::invalid_argument("sample: need --draws >= 1");
      cgd::RngStream rng(seed, 0);
      for (int d = 0; d < sm_draws; ++d) {
        const cgd::DesignDraw draw = cgd::sample(p.table, p.h, p.ord, p.params, rng);
        std::cout << desire_string(draw.u) << ' ' << bit_string(draw.z) << '\n';
      }
      return 0;
    }
    if (prob->parsed()) {
      Prepared p = prepare(pb_graph, pb_est, pb_r, pb_method);
      auto check_unit = [&](int unit) {
        if (unit < 0 || unit >= p.g.n) {
          throw std::invalid_argument("probs: unit out of range");
        }
      };
      check_unit(pb_unit);
      double value = 0.0;
      if (pb_unit2 >= 0) {
        check_unit(pb_unit2);
        value = pb_cov ? cgd::covariance_entry(pb_unit, pb_contrast, pb_unit2,
                                               pb_contrast2, p.h, p.ord, p.params)
                       : cgd::prob_pair(pb_unit, pb_contrast, pb_unit2, pb_contrast2,
                                        p.h, p.ord, p.params);
      } else if (pb_cov) {
        value = cgd::covariance_entry(pb_unit, pb_contrast, pb_unit, pb_contrast,
                                      p.h, p.ord, p.params);
      } else {
        value = cgd::prob_single(pb_unit, pb_contrast, p.ord, p.params);
      }
      if (format == "json") {
        std::cout << json{{"value", value}}.dump() << '\n';
      } else {
        std::cout << fmt(value) << '\n';
      }
      return 0;
    }
    if (est->parsed()) {
      Prepared p = prepare(es_graph, es_est, es_r, es_method);
      const cgd::OutcomeTable outcomes = read_outcomes_csv(es_outcomes, p.g.n);
      const cgd::SpectralResult vspec = cgd::cached_lambda_v(p.h, p.ord, p.params);
      const double vb = cgd::variance_bound(outcomes, vspec.lambda);
      const double var_exact =
          cgd::exact_variance_modified(outcomes, p.h, p.ord, p.params);
      std::ifstream draws_file;
      std::istream* in = &std::cin;
      if (!es_draws_file.empty()) {
        draws_file.open(es_draws_file);
        if (!draws_file) {
          throw std::invalid_argument("cannot open draws file: " + es_draws_file);
        }
        in = &draws_file;
      }
      std::string line;
      while (std::getline(*in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string ustr, zstr;
        row >> ustr;
        row >> zstr;  // optional; the realization is recomputed from u
        if (static_cast<int>(ustr.size()) != p.g.n) {
          throw std::invalid_argument("draw line: expected " + std::to_string(p.g.n) +
                                      " desire characters");
        }
        cgd::DesignDraw draw;
        draw.u = parse_desires(ustr);
        draw.z = cgd::realize(p.table, p.ord, draw.u);
        if (!zstr.empty() && zstr != bit_string(draw.z)) {
          throw std::invalid_argument(
              "draw line: intervention bits do not match the realization of the "
              "desires");
        }
        cgd::EstimateReport report;
        report.tau_hat = cgd::modified_ht(outcomes, draw, p.ord, p.params);
        report.vb = vb;
        report.vb_hat =
            cgd::vb_estimator(outcomes, draw, p.ord, p.params, vspec.lambda);
        report.var_exact = var_exact;
        report.has_var_exact = true;
        report.alpha = es_alpha;
        report.ci_cheb = cgd::chebyshev_interval(report.tau_hat, report.vb_hat, es_alpha);
        report.ci_wald = cgd::wald_interval(report.tau_hat, report.vb_hat, es_alpha);
        std::cout << cgd::report_to_json(report).dump() << '\n';
      }
      return 0;
    }
    if (simc->parsed()) {
      cgd::SimConfig cfg;
      if (!si_graph.empty()) {
        cfg.graph = cgd::read_edge_list_file(si_graph);
      } else if (!si_gen.empty()) {
        if (si_gen == "pa") {
          cgd::RngStream rng(seed, (std::uint64_t{1} << 63) | 1);
          cfg.graph = cgd::preferential_attachment(si_n, si_m, si_r_exp, rng);
        } else if (si_gen == "star") {
          cfg.graph = cgd::star(si_n);
        } else if (si_gen == "path") {
          cfg.graph = cgd::path(si_n);
        } else if (si_gen == "clique") {
          cfg.graph = cgd::clique(si_n);
        } else if (si_gen == "hub-cliques") {
          cfg.graph = cgd::hub_cliques(si_n);
        } else if (si_gen == "clique-of-cliques") {
          cfg.graph = cgd::clique_of_cliques(si_n);
        } else {
          throw std::invalid_argument("simulate: unknown generator \"" + si_gen + "\"");
        }
      } else {
        throw std::invalid_argument("simulate: need --graph or --gen");
      }
      cfg.estimand = cgd::parse_estimand_arg(si_est);
      cfg.run_cgd = cfg.run_bernoulli = cfg.run_independent_set = false;
      std::stringstream designs(si_designs);
      std::string token;
      while (std::getline(designs, token, ',')) {
        if (token.empty()) continue;
        if (token == "cgd") {
          cfg.run_cgd = true;
        } else if (token == "bernoulli") {
          cfg.run_bernoulli = true;
        } else if (token == "independent_set") {
          cfg.run_independent_set = true;
        } else {
          throw std::invalid_argument("simulate: unknown design \"" + token + "\"");
        }
      }
      if (si_model == "large") {
        cfg.model = cgd::OutcomeModel::LargeOutliers;
      } else if (si_model == "medium") {
        cfg.model = cgd::OutcomeModel::MediumOutliers;
      } else {
        cfg.model = cgd::OutcomeModel::Fixed;
        cfg.fixed_outcomes = read_outcomes_csv(si_model, cfg.graph.n);
      }
      cfg.replicates = si_replicates;
      cfg.mc_prob_draws = si_mc;
      cfg.alpha = si_alpha;
      cfg.r = si_r;
      cfg.bernoulli_p = si_bern_p;
      cfg.seed = seed;
      const cgd::SimReport report = cgd::run_simulation(cfg);
      if (!si_out.empty()) {
        cgd::emit(report, format, si_out);
      } else if (format == "json") {
        std::cout << cgd::sim_report_to_json(report).dump(2) << '\n';
      } else {
        cgd::emit_csv(report, std::cout);
      }
      return 0;
    }
    return run_oracle_check();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
