// Shared oracles for the test suite: an independent dense eigensolver, a
// brute-force conflict predicate that enumerates interventions directly
// against the exposure definitions, dense walk counts, a bisection quantile
// reference, and random fixture generators.
#ifndef CGD_TESTS_HELPERS_HPP
#define CGD_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cgd/design.hpp"
#include "cgd/estimand.hpp"
#include "cgd/estimator.hpp"
#include "cgd/graph.hpp"
#include "cgd/mathutil.hpp"
#include "cgd/rng.hpp"

namespace cgdtest {

inline cgd::Graph erdos_renyi(int n, double p, cgd::RngStream& rng) {
  std::vector<std::pair<cgd::Vertex, cgd::Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < p) edges.emplace_back(i, j);
  return cgd::from_edge_list(n, edges);
}

// Adds an edge from each isolated vertex to its successor so that
// spill-over estimands (which need a nonempty open neighborhood) apply.
inline cgd::Graph erdos_renyi_min_degree_one(int n, double p, cgd::RngStream& rng) {
  cgd::Graph g = erdos_renyi(n, p, rng);
  std::vector<std::pair<cgd::Vertex, cgd::Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (cgd::Vertex j : g.adj[i])
      if (j > i) edges.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    if (g.adj[i].empty()) edges.emplace_back(i, (i + 1) % n);
  return cgd::from_edge_list(n, edges);
}

inline Eigen::MatrixXd dense_adjacency(const cgd::Graph& g, bool with_loops) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int i = 0; i < g.n; ++i) {
    for (cgd::Vertex j : g.adj[i]) a(i, j) = 1.0;
    if (with_loops && g.loop[i]) a(i, i) = 1.0;
  }
  return a;
}

// Largest eigenvalue of the loop-inclusive adjacency via Eigen, the
// independent reference for the hand-written power iteration.
inline double dense_lambda(const cgd::Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_adjacency(g, true));
  return solver.eigenvalues().maxCoeff();
}

// Walks of length s on the loop-free adjacency via integer matrix powers.
inline std::uint64_t dense_walk_count(const cgd::Graph& g, cgd::Vertex i,
                                      cgd::Vertex j, int s) {
  const int n = g.n;
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  for (int u = 0; u < n; ++u)
    for (cgd::Vertex v : g.adj[u]) a[u][v] = 1;
  std::vector<std::vector<std::uint64_t>> p = a;
  for (int step = 1; step < s; ++step) {
    std::vector<std::vector<std::uint64_t>> next(n, std::vector<std::uint64_t>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) {
        if (p[u][w] == 0) continue;
        for (cgd::Vertex v : g.adj[w]) next[u][v] += p[u][w];
      }
    p = std::move(next);
  }
  return p[i][j];
}

inline std::vector<cgd::Vertex> closed_neighborhood(const cgd::Graph& g, cgd::Vertex i) {
  std::vector<cgd::Vertex> nb = g.adj[i];
  nb.push_back(i);
  std::sort(nb.begin(), nb.end());
  return nb;
}

// Definition-level conflict check: two units conflict when some pair of
// their contrasted exposures cannot be realized by any single intervention.
// Enumerates all assignments of the union of the two closed neighborhoods;
// coordinates outside the union cannot affect either exposure.
inline bool brute_force_conflict(const cgd::Graph& g, const cgd::Estimand& est,
                                 cgd::Vertex i, cgd::Vertex j) {
  if (i == j) return true;
  const auto ei = cgd::contrastive_exposures(g, est, i);
  const auto ej = cgd::contrastive_exposures(g, est, j);
  std::vector<cgd::Vertex> dom = closed_neighborhood(g, i);
  for (cgd::Vertex v : closed_neighborhood(g, j)) dom.push_back(v);
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  const std::size_t m = dom.size();
  const cgd::Exposure* want_i[2] = {&ei.second, &ei.first};
  const cgd::Exposure* want_j[2] = {&ej.second, &ej.first};
  std::vector<std::uint8_t> z(g.n, 0);
  for (int k = 0; k <= 1; ++k) {
    for (int l = 0; l <= 1; ++l) {
      bool satisfiable = false;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (std::size_t b = 0; b < m; ++b)
          z[dom[b]] = static_cast<std::uint8_t>((mask >> b) & 1u);
        if (cgd::exposure_of(g, i, z) == *want_i[k] &&
            cgd::exposure_of(g, j, z) == *want_j[l]) {
          satisfiable = true;
          break;
        }
      }
      if (!satisfiable) return true;
    }
  }
  return false;
}

// Random spill-over seed sets: a nonempty subset of each open neighborhood.
inline std::vector<std::vector<cgd::Vertex>> random_seeds(const cgd::Graph& g,
                                                          cgd::RngStream& rng) {
  std::vector<std::vector<cgd::Vertex>> seeds(g.n);
  for (int i = 0; i < g.n; ++i) {
    for (cgd::Vertex v : g.adj[i])
      if (rng.uniform01() < 0.5) seeds[i].push_back(v);
    if (seeds[i].empty() && !g.adj[i].empty())
      seeds[i].push_back(g.adj[i][rng.below(g.adj[i].size())]);
  }
  return seeds;
}

// Random custom estimand: per unit, two distinct random subsets of the
// closed neighborhood as treated sets, plus occasional explicit zero bits.
inline cgd::Estimand random_custom_estimand(const cgd::Graph& g, cgd::RngStream& rng) {
  std::vector<cgd::SparseIntervention> z1(g.n), z0(g.n);
  for (int i = 0; i < g.n; ++i) {
    const std::vector<cgd::Vertex> nb = closed_neighborhood(g, i);
    auto pick = [&](cgd::SparseIntervention& out) {
      out.clear();
      for (cgd::Vertex v : nb) {
        const double x = rng.uniform01();
        if (x < 0.4)
          out.emplace_back(v, 1);
        else if (x < 0.5)
          out.emplace_back(v, 0);
      }
    };
    auto treated_set = [&](const cgd::SparseIntervention& s) {
      std::vector<cgd::Vertex> t;
      for (const auto& [v, b] : s)
        if (b) t.push_back(v);
      return t;
    };
    pick(z1[i]);
    do {
      pick(z0[i]);
    } while (treated_set(z0[i]) == treated_set(z1[i]));
  }
  return cgd::custom_estimand(std::move(z1), std::move(z0));
}

// Dense assembly of a VMatrix through its entry accessor.
inline Eigen::MatrixXd dense_v(const cgd::VMatrix& v) {
  const int n = v.n;
  Eigen::MatrixXd m(2 * n, 2 * n);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < 2; ++l)
        for (int j = 0; j < n; ++j)
          m(k * n + i, l * n + j) = v.entry(i, k, j, l);
  return m;
}

// Bisection inverse of the library's normal CDF, an approximation-free
// reference for the quantile routine.
inline double quantile_bisect(double p) {
  // Mirror upper-tail probabilities onto the lower tail, where the cdf keeps
  // full relative precision and the root is sharply determined.
  if (p > 0.5) return -quantile_bisect(1.0 - p);
  double lo = -40.0, hi = 40.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (cgd::normal_cdf(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline std::vector<double> random_outcomes(int n, double lo, double hi,
                                           cgd::RngStream& rng) {
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) y[i] = lo + (hi - lo) * rng.uniform01();
  return y;
}

// Loop-free BFS distances, for distance-stratified covariance checks.
inline std::vector<int> bfs_distances(const cgd::Graph& g, cgd::Vertex src) {
  std::vector<int> dist(g.n, -1);
  std::vector<cgd::Vertex> queue{src};
  dist[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const cgd::Vertex u = queue[head];
    for (cgd::Vertex v : g.adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace cgdtest

#endif  // CGD_TESTS_HELPERS_HPP
