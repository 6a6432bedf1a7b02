// The conflict graph design: desired-exposure sampling, the deterministic
// realization step, closed-form event probabilities and covariances of the
// probability-weighted indicators, and the baseline designs used for
// comparison.
#ifndef CGD_DESIGN_HPP
#define CGD_DESIGN_HPP

#include <cstdint>
#include <vector>

#include "cgd/estimand.hpp"
#include "cgd/graph.hpp"
#include "cgd/ordering.hpp"

namespace cgd {

class RngStream;

struct DesignParams {
  double r = 2.0;     // sampling parameter
  double lambda = 1;  // dominant eigenvalue of the conflict graph

  // Probability that a unit desires a specific one of its two exposures.
  double fire_prob() const { return 1.0 / (2.0 * r * lambda); }
  // Probability of the null desire *.
  double star_prob() const { return 1.0 - 1.0 / (r * lambda); }
};

// Throws std::invalid_argument unless r > 0, lambda >= 1, and r*lambda >= 1.
void validate_params(const DesignParams& params);

// Desired exposure of one unit. Underlying values give the enumeration
// order used by the exactness oracle.
enum class Desire : std::uint8_t { E1 = 0, E0 = 1, Star = 2 };

struct DesignDraw {
  std::vector<Desire> u;       // desired exposures, one per unit
  std::vector<std::uint8_t> z; // realized intervention bits
};

// True when unit i desires exposure k (1 = e1, 0 = e0) and every
// more-important conflict neighbor drew *.
bool desired_event(Vertex i, int k, const std::vector<Desire>& u,
                   const ImportanceOrdering& ord);

// Deterministic realization of the desired exposures: every unit whose
// desired event holds writes its contrasted intervention on its whole
// closed neighborhood. Fired events never contradict each other, so the
// visit order is immaterial.
std::vector<std::uint8_t> realize(const ContrastTable& table,
                                  const ImportanceOrdering& ord,
                                  const std::vector<Desire>& u);

// One draw of the design: desires are sampled i.i.d. over {e1, e0, *} with
// probabilities (1/(2r lambda), 1/(2r lambda), 1 - 1/(r lambda)), consuming
// exactly n uniforms in vertex-id order, then realized.
DesignDraw sample(const ContrastTable& table, const Graph& h,
                  const ImportanceOrdering& ord, const DesignParams& params,
                  RngStream& rng);
DesignDraw sample(const Graph& g, const Estimand& est, const Graph& h,
                  const ImportanceOrdering& ord, const DesignParams& params,
                  RngStream& rng);

// Pr of the desired exposure event of (i, k): (1/(2r lambda)) * q^{|before(i)|}
// with q the * probability. Symmetric in k.
double prob_single(Vertex i, int k, const ImportanceOrdering& ord,
                   const DesignParams& params);

// Pr of the intersection of two desired exposure events: zero when the
// units conflict (or one unit desires both exposures), otherwise
// (1/(2r lambda))^2 * q^{|before(i) ∪ before(j)|}. The diagonal (i,k)=(j,l)
// is the single-event probability.
double prob_pair(Vertex i, int k, Vertex j, int l, const Graph& h,
                 const ImportanceOrdering& ord, const DesignParams& params);

// Covariance of the probability-weighted indicators 1{E_(i,k)}/p and
// 1{E_(j,l)}/p: the variance 2 r lambda / q^{|before(i)|} - 1 on the
// diagonal, -1 for same-unit cross contrasts and conflicting pairs, and
// q^{-|before(i) ∩ before(j)|} - 1 otherwise (zero once the before sets are
// disjoint, which distance 3 forces).
double covariance_entry(Vertex i, int k, Vertex j, int l, const Graph& h,
                        const ImportanceOrdering& ord, const DesignParams& params);

// Baselines. Bernoulli: i.i.d. Bern(p) bits. Independent set: a uniformly
// permuted greedy maximal independent set receives i.i.d. Bern(1/2) bits in
// vertex-id order and every other unit stays at 0.
std::vector<std::uint8_t> bernoulli_design(int n, double p, RngStream& rng);
std::vector<std::uint8_t> independent_set_design(const Graph& g, RngStream& rng);

}  // namespace cgd

#endif  // CGD_DESIGN_HPP
