#include "cgd/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "cgd/mathutil.hpp"

namespace cgd {

OracleDistribution enumerate_design(const Graph& g, const Estimand& est,
                                    const Graph& h, const ImportanceOrdering& ord,
                                    const DesignParams& params) {
  validate_params(params);
  if (g.n < 1 || g.n > 12) {
    throw std::invalid_argument("enumerate_design: n must lie in [1, 12]");
  }
  const ContrastTable table = contrast_table(g, est);
  const double p = params.fire_prob();
  const double q = params.star_prob();
  if (q <= 0.0 && h.edge_count() > 0) {
    throw std::invalid_argument(
        "enumerate_design: r * lambda = 1 requires an edgeless conflict graph");
  }

  std::size_t total = 1;
  for (int i = 0; i < g.n; ++i) total *= 3;

  OracleDistribution dist;
  dist.n = g.n;
  dist.atoms.resize(total);
  const bool log_space = g.n > 9;
  const double log_p = std::log(p);
  const double log_q = q > 0.0 ? std::log(q) : 0.0;

  std::vector<Desire> u(g.n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    int stars = 0;
    // Coordinate 0 is the most significant digit; e1 < e0 < *.
    for (int i = g.n - 1; i >= 0; --i) {
      const auto digit = static_cast<std::uint8_t>(rest % 3);
      rest /= 3;
      u[i] = static_cast<Desire>(digit);
      if (u[i] == Desire::Star) ++stars;
    }
    double prob;
    if (stars > 0 && q <= 0.0) {
      prob = 0.0;
    } else if (log_space) {
      prob = std::exp(log_p * (g.n - stars) + log_q * stars);
    } else {
      prob = 1.0;
      for (int i = 0; i < g.n; ++i) prob *= (u[i] == Desire::Star ? q : p);
    }
    OracleAtom& atom = dist.atoms[idx];
    atom.u = u;
    atom.prob = prob;
    atom.z = realize(table, ord, u);
  }
  return dist;
}

double oracle_expectation(const OracleDistribution& dist, const AtomStatistic& stat) {
  Accumulator acc;
  for (const OracleAtom& atom : dist.atoms) acc.add(atom.prob * stat(atom));
  return acc.value();
}

double oracle_variance(const OracleDistribution& dist, const AtomStatistic& stat) {
  const double mean = oracle_expectation(dist, stat);
  Accumulator acc;
  for (const OracleAtom& atom : dist.atoms) {
    const double d = stat(atom) - mean;
    acc.add(atom.prob * d * d);
  }
  return acc.value();
}

double oracle_covariance(const OracleDistribution& dist, const AtomStatistic& f,
                         const AtomStatistic& g) {
  const double mean_f = oracle_expectation(dist, f);
  const double mean_g = oracle_expectation(dist, g);
  Accumulator acc;
  for (const OracleAtom& atom : dist.atoms) {
    acc.add(atom.prob * (f(atom) - mean_f) * (g(atom) - mean_g));
  }
  return acc.value();
}

ExposureProbs exact_exposure_probs(const OracleDistribution& dist, const Graph& g,
                                   const Estimand& est) {
  const ContrastTable table = contrast_table(g, est);
  ExposureProbs probs;
  probs.p1.assign(g.n, 0.0);
  probs.p0.assign(g.n, 0.0);
  std::vector<Accumulator> acc1(g.n), acc0(g.n);
  std::vector<Vertex> realized;
  for (const OracleAtom& atom : dist.atoms) {
    for (Vertex i = 0; i < g.n; ++i) {
      realized.clear();
      for (Vertex w : table.nbhd[i]) {
        if (atom.z[w]) realized.push_back(w);
      }
      if (realized == table.e1[i].treated) {
        acc1[i].add(atom.prob);
      } else if (realized == table.e0[i].treated) {
        acc0[i].add(atom.prob);
      }
    }
  }
  for (Vertex i = 0; i < g.n; ++i) {
    probs.p1[i] = acc1[i].value();
    probs.p0[i] = acc0[i].value();
  }
  return probs;
}

}  // namespace cgd
