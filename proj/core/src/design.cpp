#include "cgd/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cgd/rng.hpp"

namespace cgd {

void validate_params(const DesignParams& params) {
  if (!(params.r > 0.0)) {
    throw std::invalid_argument("design: sampling parameter r must be positive");
  }
  if (!(params.lambda >= 1.0 - 1e-12)) {
    throw std::invalid_argument("design: lambda must be at least 1");
  }
  if (params.r * params.lambda < 1.0 - 1e-12) {
    throw std::invalid_argument("design: need r * lambda >= 1");
  }
}

bool desired_event(Vertex i, int k, const std::vector<Desire>& u,
                   const ImportanceOrdering& ord) {
  if (k != 0 && k != 1) throw std::invalid_argument("desired_event: contrast must be 0 or 1");
  const Desire want = k == 1 ? Desire::E1 : Desire::E0;
  if (u[i] != want) return false;
  for (Vertex j : ord.before[i]) {
    if (u[j] != Desire::Star) return false;
  }
  return true;
}

std::vector<std::uint8_t> realize(const ContrastTable& table,
                                  const ImportanceOrdering& ord,
                                  const std::vector<Desire>& u) {
  const int n = static_cast<int>(table.nbhd.size());
  std::vector<std::uint8_t> z(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    if (u[i] == Desire::Star) continue;
    bool fires = true;
    for (Vertex j : ord.before[i]) {
      if (u[j] != Desire::Star) {
        fires = false;
        break;
      }
    }
    if (!fires) continue;
    const auto& treated =
        (u[i] == Desire::E1 ? table.e1[i] : table.e0[i]).treated;
    // Pin the whole closed neighborhood, zeros included.
    auto it = treated.begin();
    for (Vertex w : table.nbhd[i]) {
      if (it != treated.end() && *it == w) {
        z[w] = 1;
        ++it;
      } else {
        z[w] = 0;
      }
    }
  }
  return z;
}

DesignDraw sample(const ContrastTable& table, const Graph& h,
                  const ImportanceOrdering& ord, const DesignParams& params,
                  RngStream& rng) {
  validate_params(params);
  if (params.star_prob() <= 0.0 && h.edge_count() > 0) {
    throw std::invalid_argument(
        "design: r * lambda = 1 leaves no null desires; requires an edgeless "
        "conflict graph");
  }
  const int n = static_cast<int>(table.nbhd.size());
  const double p = params.fire_prob();
  DesignDraw draw;
  draw.u.resize(n);
  for (Vertex i = 0; i < n; ++i) {
    const double v = rng.uniform01();
    draw.u[i] = v < p ? Desire::E1 : (v < 2.0 * p ? Desire::E0 : Desire::Star);
  }
  draw.z = realize(table, ord, draw.u);
  return draw;
}

DesignDraw sample(const Graph& g, const Estimand& est, const Graph& h,
                  const ImportanceOrdering& ord, const DesignParams& params,
                  RngStream& rng) {
  return sample(contrast_table(g, est), h, ord, params, rng);
}

namespace {

std::size_t union_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t shared = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++shared;
      ++ia;
      ++ib;
    }
  }
  return a.size() + b.size() - shared;
}

std::size_t intersection_size(const std::vector<Vertex>& a,
                              const std::vector<Vertex>& b) {
  std::size_t shared = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++shared;
      ++ia;
      ++ib;
    }
  }
  return shared;
}

void check_contrast(int k) {
  if (k != 0 && k != 1) throw std::invalid_argument("contrast index must be 0 or 1");
}

}  // namespace

double prob_single(Vertex i, int k, const ImportanceOrdering& ord,
                   const DesignParams& params) {
  check_contrast(k);
  validate_params(params);
  const double q = params.star_prob();
  return params.fire_prob() *
         std::pow(q, static_cast<double>(ord.before[i].size()));
}

double prob_pair(Vertex i, int k, Vertex j, int l, const Graph& h,
                 const ImportanceOrdering& ord, const DesignParams& params) {
  check_contrast(k);
  check_contrast(l);
  validate_params(params);
  if (i == j) return k == l ? prob_single(i, k, ord, params) : 0.0;
  if (h.has_edge(i, j)) return 0.0;
  const double p = params.fire_prob();
  const double q = params.star_prob();
  const double m = static_cast<double>(union_size(ord.before[i], ord.before[j]));
  return p * p * std::pow(q, m);
}

double covariance_entry(Vertex i, int k, Vertex j, int l, const Graph& h,
                        const ImportanceOrdering& ord, const DesignParams& params) {
  check_contrast(k);
  check_contrast(l);
  validate_params(params);
  const double q = params.star_prob();
  if (i == j) {
    if (k != l) return -1.0;
    const double qm = std::pow(q, static_cast<double>(ord.before[i].size()));
    return 2.0 * params.r * params.lambda / qm - 1.0;
  }
  if (h.has_edge(i, j)) return -1.0;
  const std::size_t shared = intersection_size(ord.before[i], ord.before[j]);
  if (shared == 0) return 0.0;
  return std::pow(q, -static_cast<double>(shared)) - 1.0;
}

std::vector<std::uint8_t> bernoulli_design(int n, double p, RngStream& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("bernoulli_design: p outside [0,1]");
  std::vector<std::uint8_t> z(n);
  for (int i = 0; i < n; ++i) z[i] = rng.uniform01() < p ? 1 : 0;
  return z;
}

std::vector<std::uint8_t> independent_set_design(const Graph& g, RngStream& rng) {
  std::vector<Vertex> perm(g.n);
  for (Vertex i = 0; i < g.n; ++i) perm[i] = i;
  for (int i = g.n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<std::uint8_t> in_set(g.n, 0);
  for (Vertex v : perm) {
    bool blocked = false;
    for (Vertex w : g.adj[v]) {
      if (in_set[w]) {
        blocked = true;
        break;
      }
    }
    if (!blocked) in_set[v] = 1;
  }
  std::vector<std::uint8_t> z(g.n, 0);
  for (Vertex v = 0; v < g.n; ++v) {
    if (in_set[v]) z[v] = rng.uniform01() < 0.5 ? 1 : 0;
  }
  return z;
}

}  // namespace cgd
