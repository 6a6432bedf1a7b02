// Effect estimators for the conflict graph design, the exact variance of
// the modified estimator, the operator-norm variance bound built from the
// signed covariance matrix V, its unbiased plug-in estimator, and the
// confidence intervals derived from it.
#ifndef CGD_ESTIMATOR_HPP
#define CGD_ESTIMATOR_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cgd/design.hpp"
#include "cgd/estimand.hpp"
#include "cgd/graph.hpp"
#include "cgd/ordering.hpp"

namespace cgd {

class RngStream;

struct OutcomeTable {
  std::vector<double> y1;  // potential outcome under the unit's e1 exposure
  std::vector<double> y0;  // potential outcome under the unit's e0 exposure
};

// (1/n) sum of y1_i - y0_i.
double true_effect(const OutcomeTable& outcomes);

// Inverse-probability estimator indexed by desired exposure events. Under
// each event the realized exposure is exactly the contrasted one, so the
// observed outcome equals the corresponding potential outcome.
double modified_ht(const OutcomeTable& outcomes, const DesignDraw& draw,
                   const ImportanceOrdering& ord, const DesignParams& params);

// Realized-exposure probabilities per unit and contrast, the denominators
// of the standard estimator.
struct ExposureProbs {
  std::vector<double> p1;
  std::vector<double> p0;
};

// Standard Horvitz-Thompson estimator over realized exposures. Throws
// std::runtime_error when an indicator fires on a zero recorded
// probability.
double standard_ht(const OutcomeTable& outcomes, const ContrastTable& table,
                   const std::vector<std::uint8_t>& z, const ExposureProbs& probs);
double standard_ht(const OutcomeTable& outcomes, const Graph& g, const Estimand& est,
                   const std::vector<std::uint8_t>& z, const ExposureProbs& probs);

// Monte Carlo estimate of realized-exposure probabilities under any design;
// draw_z must produce one intervention per call from the supplied stream.
ExposureProbs mc_exposure_probs(
    const ContrastTable& table, int draws,
    const std::function<std::vector<std::uint8_t>(RngStream&)>& draw_z,
    RngStream& rng);

// The 2n-by-2n signed covariance matrix of the probability-weighted
// indicators, stored as the per-unit variance diagonal plus the sparse
// unit-level coupling matrix W over pairs within conflict distance 2.
// Indices are (i, k) -> k*n + i with the e0 block first.
struct VMatrix {
  int n = 0;
  DesignParams params;
  std::vector<double> vdiag;       // per-unit indicator variance
  std::vector<std::size_t> wrow;   // CSR row starts, length n + 1
  std::vector<Vertex> wcol;        // coupled unit ids, sorted per row
  std::vector<double> wval;        // coupling values

  std::size_t dim() const { return 2 * static_cast<std::size_t>(n); }
  // out = V x for a length-2n vector.
  void multiply(const std::vector<double>& x, std::vector<double>& out) const;
  // Single entry lookup, mainly for inspection and tests.
  double entry(Vertex i, int k, Vertex j, int l) const;
};

VMatrix build_v_matrix(const Graph& h, const ImportanceOrdering& ord,
                       const DesignParams& params);

// Dominant eigenvalue of V by power iteration with the sparse multiply.
// V is positive semidefinite, so the iteration starts from a fixed
// pseudo-random vector and needs no shift.
SpectralResult lambda_v(const VMatrix& v, double tol = 1e-10, int max_iter = 100000);

// lambda_v keyed by a content hash of (h, ordering, r); repeated calls for
// the same inputs reuse the stored result.
SpectralResult cached_lambda_v(const Graph& h, const ImportanceOrdering& ord,
                               const DesignParams& params);

// Exact design variance of the modified estimator via the quadratic form
// of V with the stacked outcome vector.
double exact_variance_modified(const OutcomeTable& outcomes, const VMatrix& v);
double exact_variance_modified(const OutcomeTable& outcomes, const Graph& h,
                               const ImportanceOrdering& ord,
                               const DesignParams& params);

// VB = (lambda(V)/n) * ((1/n) sum y1^2 + (1/n) sum y0^2).
double variance_bound(const OutcomeTable& outcomes, double lambda_v_value);

// Unbiased plug-in for VB: fired indicators replace the second moments.
double vb_estimator(const OutcomeTable& outcomes, const DesignDraw& draw,
                    const ImportanceOrdering& ord, const DesignParams& params,
                    double lambda_v_value);

// Intervals centered at tau_hat with half-widths sqrt(vb_hat/alpha) and
// Phi^{-1}(1 - alpha/2) * sqrt(vb_hat).
std::pair<double, double> chebyshev_interval(double tau_hat, double vb_hat,
                                             double alpha);
std::pair<double, double> wald_interval(double tau_hat, double vb_hat, double alpha);

// Anticipated coverage of the Wald interval when the estimator is normal
// with variance ratio sigma2_ratio = Var/VB and the bound estimate carries
// relative error c * lambda(H)/n.
double predicted_coverage(double alpha, double sigma2_ratio, double lam_over_n,
                          double c);

struct EstimateReport {
  double tau_hat = 0.0;
  double vb = 0.0;
  double vb_hat = 0.0;
  double var_exact = 0.0;
  bool has_var_exact = false;
  double alpha = 0.05;
  std::pair<double, double> ci_cheb;
  std::pair<double, double> ci_wald;
};

nlohmann::json report_to_json(const EstimateReport& report);

}  // namespace cgd

#endif  // CGD_ESTIMATOR_HPP
