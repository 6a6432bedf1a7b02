#include "cgd/estimator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "cgd/mathutil.hpp"
#include "cgd/rng.hpp"

namespace cgd {

double true_effect(const OutcomeTable& outcomes) {
  const std::size_t n = outcomes.y1.size();
  if (n == 0 || outcomes.y0.size() != n) {
    throw std::invalid_argument("true_effect: outcome table is empty or ragged");
  }
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = outcomes.y1[i] - outcomes.y0[i];
  return pairwise_sum(diff) / static_cast<double>(n);
}

double modified_ht(const OutcomeTable& outcomes, const DesignDraw& draw,
                   const ImportanceOrdering& ord, const DesignParams& params) {
  const int n = static_cast<int>(draw.u.size());
  Accumulator acc;
  for (Vertex i = 0; i < n; ++i) {
    if (draw.u[i] == Desire::Star) continue;
    bool fires = true;
    for (Vertex j : ord.before[i]) {
      if (draw.u[j] != Desire::Star) {
        fires = false;
        break;
      }
    }
    if (!fires) continue;
    const double p = prob_single(i, 1, ord, params);
    if (draw.u[i] == Desire::E1) {
      acc.add(outcomes.y1[i] / p);
    } else {
      acc.add(-outcomes.y0[i] / p);
    }
  }
  return acc.value() / static_cast<double>(n);
}

double standard_ht(const OutcomeTable& outcomes, const ContrastTable& table,
                   const std::vector<std::uint8_t>& z, const ExposureProbs& probs) {
  const int n = static_cast<int>(table.nbhd.size());
  std::vector<Vertex> realized;
  Accumulator acc;
  for (Vertex i = 0; i < n; ++i) {
    realized.clear();
    for (Vertex w : table.nbhd[i]) {
      if (z[w]) realized.push_back(w);
    }
    if (realized == table.e1[i].treated) {
      if (probs.p1[i] <= 0.0) {
        throw std::runtime_error(
            "standard_ht: e1 exposure realized for unit " + std::to_string(i) +
            " with recorded probability 0");
      }
      acc.add(outcomes.y1[i] / probs.p1[i]);
    } else if (realized == table.e0[i].treated) {
      if (probs.p0[i] <= 0.0) {
        throw std::runtime_error(
            "standard_ht: e0 exposure realized for unit " + std::to_string(i) +
            " with recorded probability 0");
      }
      acc.add(-outcomes.y0[i] / probs.p0[i]);
    }
  }
  return acc.value() / static_cast<double>(n);
}

double standard_ht(const OutcomeTable& outcomes, const Graph& g, const Estimand& est,
                   const std::vector<std::uint8_t>& z, const ExposureProbs& probs) {
  return standard_ht(outcomes, contrast_table(g, est), z, probs);
}

ExposureProbs mc_exposure_probs(
    const ContrastTable& table, int draws,
    const std::function<std::vector<std::uint8_t>(RngStream&)>& draw_z,
    RngStream& rng) {
  if (draws < 1) throw std::invalid_argument("mc_exposure_probs: need draws >= 1");
  const int n = static_cast<int>(table.nbhd.size());
  std::vector<std::int64_t> c1(n, 0), c0(n, 0);
  std::vector<Vertex> realized;
  for (int d = 0; d < draws; ++d) {
    const std::vector<std::uint8_t> z = draw_z(rng);
    for (Vertex i = 0; i < n; ++i) {
      realized.clear();
      for (Vertex w : table.nbhd[i]) {
        if (z[w]) realized.push_back(w);
      }
      if (realized == table.e1[i].treated) {
        ++c1[i];
      } else if (realized == table.e0[i].treated) {
        ++c0[i];
      }
    }
  }
  ExposureProbs probs;
  probs.p1.resize(n);
  probs.p0.resize(n);
  for (Vertex i = 0; i < n; ++i) {
    probs.p1[i] = static_cast<double>(c1[i]) / draws;
    probs.p0[i] = static_cast<double>(c0[i]) / draws;
  }
  return probs;
}

void VMatrix::multiply(const std::vector<double>& x, std::vector<double>& out) const {
  const std::size_t un = static_cast<std::size_t>(n);
  if (x.size() != 2 * un) throw std::invalid_argument("VMatrix: vector length mismatch");
  out.assign(2 * un, 0.0);
  // Per-unit difference across the two contrast blocks; the coupling part
  // of V acts on it with opposite signs in the two blocks.
  std::vector<double> diff(un), wd(un, 0.0);
  for (std::size_t i = 0; i < un; ++i) diff[i] = x[i] - x[un + i];
  for (std::size_t i = 0; i < un; ++i) {
    double acc = 0.0;
    for (std::size_t t = wrow[i]; t < wrow[i + 1]; ++t) {
      acc += wval[t] * diff[wcol[t]];
    }
    wd[i] = acc;
  }
  for (std::size_t i = 0; i < un; ++i) {
    out[i] = vdiag[i] * x[i] + x[un + i] + wd[i];
    out[un + i] = vdiag[i] * x[un + i] + x[i] - wd[i];
  }
}

double VMatrix::entry(Vertex i, int k, Vertex j, int l) const {
  if (k != 0 && k != 1) throw std::invalid_argument("VMatrix::entry: bad contrast");
  if (l != 0 && l != 1) throw std::invalid_argument("VMatrix::entry: bad contrast");
  const double sign = k == l ? 1.0 : -1.0;
  if (i == j) return k == l ? vdiag[i] : 1.0;
  const auto begin = wcol.begin() + static_cast<std::ptrdiff_t>(wrow[i]);
  const auto end = wcol.begin() + static_cast<std::ptrdiff_t>(wrow[i + 1]);
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return 0.0;
  return sign * wval[it - wcol.begin()];
}

VMatrix build_v_matrix(const Graph& h, const ImportanceOrdering& ord,
                       const DesignParams& params) {
  validate_params(params);
  VMatrix v;
  v.n = h.n;
  v.params = params;
  const double q = params.star_prob();
  const double two_rl = 2.0 * params.r * params.lambda;
  v.vdiag.resize(h.n);
  for (Vertex i = 0; i < h.n; ++i) {
    v.vdiag[i] =
        two_rl * std::pow(q, -static_cast<double>(ord.before[i].size())) - 1.0;
  }

  v.wrow.assign(h.n + 1, 0);
  std::vector<int> cnt(h.n, 0);
  std::vector<std::uint8_t> adjacent(h.n, 0);
  std::vector<Vertex> touched;
  for (Vertex i = 0; i < h.n; ++i) {
    touched.clear();
    // Shared-parent multiplicities: every parent of i contributes each of
    // its other children once.
    for (Vertex p : ord.before[i]) {
      for (Vertex c : ord.after[p]) {
        if (c == i) continue;
        if (cnt[c]++ == 0) touched.push_back(c);
      }
    }
    for (Vertex j : h.adj[i]) {
      adjacent[j] = 1;
      if (cnt[j] == 0) touched.push_back(j);
    }
    std::sort(touched.begin(), touched.end());
    for (Vertex j : touched) {
      const double value =
          adjacent[j] ? -1.0 : std::pow(q, -static_cast<double>(cnt[j])) - 1.0;
      v.wcol.push_back(j);
      v.wval.push_back(value);
    }
    v.wrow[i + 1] = v.wcol.size();
    for (Vertex j : touched) cnt[j] = 0;
    for (Vertex j : h.adj[i]) adjacent[j] = 0;
  }
  return v;
}

SpectralResult lambda_v(const VMatrix& v, double tol, int max_iter) {
  const std::size_t dim = v.dim();
  if (dim == 0) throw std::invalid_argument("lambda_v: empty matrix");
  // V is positive semidefinite with mixed-sign eigenvectors, so the start
  // vector is pseudo-random rather than all-ones (which can be orthogonal
  // to the leading eigenspace); the fixed seed keeps results reproducible.
  RngStream rng(0x76651db3u, 1);
  std::vector<double> x(dim), y(dim);
  for (auto& e : x) e = 2.0 * rng.uniform01() - 1.0;
  double norm = 0.0;
  for (double e : x) norm += e * e;
  norm = std::sqrt(norm);
  for (auto& e : x) e /= norm;

  SpectralResult result;
  result.vector.assign(dim, 0.0);
  double ray_prev = 0.0;
  double rel_change = 0.0;
  int it = 0;
  for (; it < max_iter; ++it) {
    v.multiply(x, y);
    double ray = 0.0;
    for (std::size_t t = 0; t < dim; ++t) ray += x[t] * y[t];
    rel_change = std::fabs(ray - ray_prev) / std::max(std::fabs(ray), 1e-300);
    double resid = 0.0;
    for (std::size_t t = 0; t < dim; ++t) {
      resid = std::max(resid, std::fabs(y[t] - ray * x[t]));
    }
    norm = 0.0;
    for (double e : y) norm += e * e;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      for (auto& e : x) e = 2.0 * rng.uniform01() - 1.0;
      continue;
    }
    for (std::size_t t = 0; t < dim; ++t) x[t] = y[t] / norm;
    if (it > 0 && rel_change <= tol && resid <= tol * std::max(ray, 1.0)) {
      result.lambda = ray;
      result.vector = x;
      result.iterations = it + 1;
      result.residual = rel_change;
      return result;
    }
    ray_prev = ray;
  }
  throw std::runtime_error("lambda_v: no convergence after " +
                           std::to_string(max_iter) + " iterations");
}

namespace {

std::uint64_t double_bits(double x) { return std::bit_cast<std::uint64_t>(x); }

std::uint64_t content_hash(const Graph& h, const ImportanceOrdering& ord,
                           const DesignParams& params) {
  std::uint64_t hash = 0x9d3f8c71u;
  hash = hash_combine(hash, static_cast<std::uint64_t>(h.n));
  for (Vertex i = 0; i < h.n; ++i) {
    hash = hash_combine(hash, static_cast<std::uint64_t>(h.loop[i]));
    hash = hash_combine(hash, static_cast<std::uint64_t>(h.adj[i].size()));
    for (Vertex j : h.adj[i]) hash = hash_combine(hash, static_cast<std::uint64_t>(j));
  }
  for (int p : ord.pi) hash = hash_combine(hash, static_cast<std::uint64_t>(p));
  hash = hash_combine(hash, double_bits(params.r));
  hash = hash_combine(hash, double_bits(params.lambda));
  return hash;
}

}  // namespace

SpectralResult cached_lambda_v(const Graph& h, const ImportanceOrdering& ord,
                               const DesignParams& params) {
  static std::mutex mutex;
  static std::unordered_map<std::uint64_t, SpectralResult> cache;
  const std::uint64_t key = content_hash(h, ord, params);
  {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const VMatrix v = build_v_matrix(h, ord, params);
  SpectralResult spec = lambda_v(v);
  {
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, spec);
  }
  return spec;
}

double exact_variance_modified(const OutcomeTable& outcomes, const VMatrix& v) {
  const std::size_t un = static_cast<std::size_t>(v.n);
  if (outcomes.y1.size() != un || outcomes.y0.size() != un) {
    throw std::invalid_argument("exact_variance_modified: outcome length mismatch");
  }
  std::vector<double> stacked(2 * un), out;
  for (std::size_t i = 0; i < un; ++i) {
    stacked[i] = outcomes.y0[i];
    stacked[un + i] = outcomes.y1[i];
  }
  v.multiply(stacked, out);
  std::vector<double> terms(2 * un);
  for (std::size_t t = 0; t < 2 * un; ++t) terms[t] = stacked[t] * out[t];
  return pairwise_sum(terms) / (static_cast<double>(un) * static_cast<double>(un));
}

double exact_variance_modified(const OutcomeTable& outcomes, const Graph& h,
                               const ImportanceOrdering& ord,
                               const DesignParams& params) {
  return exact_variance_modified(outcomes, build_v_matrix(h, ord, params));
}

double variance_bound(const OutcomeTable& outcomes, double lambda_v_value) {
  const std::size_t n = outcomes.y1.size();
  if (n == 0 || outcomes.y0.size() != n) {
    throw std::invalid_argument("variance_bound: outcome table is empty or ragged");
  }
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = outcomes.y1[i] * outcomes.y1[i];
  const double m1 = pairwise_sum(sq) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = outcomes.y0[i] * outcomes.y0[i];
  const double m0 = pairwise_sum(sq) / static_cast<double>(n);
  return lambda_v_value / static_cast<double>(n) * (m1 + m0);
}

double vb_estimator(const OutcomeTable& outcomes, const DesignDraw& draw,
                    const ImportanceOrdering& ord, const DesignParams& params,
                    double lambda_v_value) {
  const int n = static_cast<int>(draw.u.size());
  Accumulator acc;
  for (Vertex i = 0; i < n; ++i) {
    for (int k = 0; k < 2; ++k) {
      if (!desired_event(i, k, draw.u, ord)) continue;
      const double y = k == 1 ? outcomes.y1[i] : outcomes.y0[i];
      acc.add(y * y / prob_single(i, k, ord, params));
    }
  }
  return lambda_v_value * acc.value() /
         (static_cast<double>(n) * static_cast<double>(n));
}

namespace {

void check_interval_args(double vb_hat, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("interval: alpha must lie in (0, 1]");
  }
  if (!(vb_hat >= 0.0)) {
    throw std::invalid_argument("interval: variance estimate must be nonnegative");
  }
}

}  // namespace

std::pair<double, double> chebyshev_interval(double tau_hat, double vb_hat,
                                             double alpha) {
  check_interval_args(vb_hat, alpha);
  const double hw = std::sqrt(vb_hat / alpha);
  return {tau_hat - hw, tau_hat + hw};
}

std::pair<double, double> wald_interval(double tau_hat, double vb_hat, double alpha) {
  check_interval_args(vb_hat, alpha);
  const double hw =
      alpha >= 1.0 ? 0.0 : normal_quantile(1.0 - alpha / 2.0) * std::sqrt(vb_hat);
  return {tau_hat - hw, tau_hat + hw};
}

double predicted_coverage(double alpha, double sigma2_ratio, double lam_over_n,
                          double c) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("predicted_coverage: alpha must lie in (0, 1]");
  }
  if (!(sigma2_ratio >= 0.0 && sigma2_ratio <= 1.0)) {
    throw std::invalid_argument("predicted_coverage: variance ratio must lie in [0, 1]");
  }
  if (!(c * lam_over_n < 1.0)) {
    throw std::invalid_argument("predicted_coverage: need c * lambda/n < 1");
  }
  const double quant = alpha >= 1.0 ? 0.0 : normal_quantile(1.0 - alpha / 2.0);
  const double arg = quant * std::sqrt(1.0 - c * lam_over_n);
  const double sigma = std::sqrt(sigma2_ratio);
  if (sigma == 0.0) return arg > 0.0 ? 1.0 : 0.0;
  return 1.0 - 2.0 * (1.0 - normal_cdf(arg / sigma));
}

nlohmann::json report_to_json(const EstimateReport& report) {
  nlohmann::json j;
  j["tau_hat"] = report.tau_hat;
  j["vb"] = report.vb;
  j["vb_hat"] = report.vb_hat;
  if (report.has_var_exact) {
    j["var_exact"] = report.var_exact;
  } else {
    j["var_exact"] = nullptr;
  }
  j["alpha"] = report.alpha;
  j["ci_cheb"] = {report.ci_cheb.first, report.ci_cheb.second};
  j["ci_wald"] = {report.ci_wald.first, report.ci_wald.second};
  return j;
}

}  // namespace cgd
