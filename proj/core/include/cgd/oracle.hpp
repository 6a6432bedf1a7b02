// Exact distribution of the design at small n by enumerating all 3^n
// desired-exposure assignments. Ground truth for unbiasedness, probability,
// and covariance claims without Monte Carlo error.
#ifndef CGD_ORACLE_HPP
#define CGD_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "cgd/design.hpp"
#include "cgd/estimand.hpp"
#include "cgd/estimator.hpp"
#include "cgd/graph.hpp"
#include "cgd/ordering.hpp"

namespace cgd {

struct OracleAtom {
  std::vector<Desire> u;
  std::vector<std::uint8_t> z;  // deterministic realization of u
  double prob = 0.0;
};

struct OracleDistribution {
  int n = 0;
  std::vector<OracleAtom> atoms;  // lexicographic in u with e1 < e0 < *
};

// Enumerates every assignment with its product-form probability. Requires
// n <= 12 (3^12 atoms). Probabilities use direct products up to n = 9 and
// log-space accumulation beyond.
OracleDistribution enumerate_design(const Graph& g, const Estimand& est,
                                    const Graph& h, const ImportanceOrdering& ord,
                                    const DesignParams& params);

using AtomStatistic = std::function<double(const OracleAtom&)>;

double oracle_expectation(const OracleDistribution& dist, const AtomStatistic& stat);
double oracle_variance(const OracleDistribution& dist, const AtomStatistic& stat);
double oracle_covariance(const OracleDistribution& dist, const AtomStatistic& f,
                         const AtomStatistic& g);

// Exact realized-exposure probabilities, the denominators of the standard
// estimator, computed from the atom list.
ExposureProbs exact_exposure_probs(const OracleDistribution& dist, const Graph& g,
                                   const Estimand& est);

}  // namespace cgd

#endif  // CGD_ORACLE_HPP
