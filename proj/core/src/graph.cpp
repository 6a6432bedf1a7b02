#include "cgd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cgd/rng.hpp"

namespace cgd {

bool Graph::has_edge(Vertex i, Vertex j) const {
  const auto& nb = adj[i];
  return std::binary_search(nb.begin(), nb.end(), j);
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex i = 0; i < n; ++i) d = std::max(d, degree(i));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nb : adj) total += nb.size();
  return total / 2;
}

namespace {

Graph build_from_pairs(int n, std::vector<std::pair<Vertex, Vertex>>& edges,
                       bool all_self_loops) {
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  g.loop.assign(n, all_self_loops ? 1 : 0);
  for (const auto& [a, b] : edges) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

}  // namespace

Graph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                     bool all_self_loops) {
  if (n < 0) throw std::invalid_argument("from_edge_list: negative vertex count");
  std::vector<std::pair<Vertex, Vertex>> clean;
  clean.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("from_edge_list: vertex out of range [0," +
                                  std::to_string(n) + ")");
    }
    if (a == b) {
      throw std::invalid_argument(
          "from_edge_list: explicit self edge; self-loops enter via the flag set");
    }
    clean.emplace_back(a, b);
  }
  return build_from_pairs(n, clean, all_self_loops);
}

Graph with_all_self_loops(Graph g) {
  std::fill(g.loop.begin(), g.loop.end(), std::uint8_t{1});
  return g;
}

Graph power_graph_two(const Graph& g) {
  Graph h;
  h.n = g.n;
  h.adj.assign(g.n, {});
  h.loop.assign(g.n, 1);
  std::vector<std::uint8_t> mark(g.n, 0);
  std::vector<Vertex> touched;
  for (Vertex i = 0; i < g.n; ++i) {
    touched.clear();
    for (Vertex j : g.adj[i]) {
      if (!mark[j]) {
        mark[j] = 1;
        touched.push_back(j);
      }
      for (Vertex k : g.adj[j]) {
        if (k != i && !mark[k]) {
          mark[k] = 1;
          touched.push_back(k);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    h.adj[i] = touched;
    for (Vertex j : touched) mark[j] = 0;
  }
  return h;
}

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  int next = 0;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.adj[v]) {
        if (comp[w] < 0) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

SpectralResult largest_eigenvalue(const Graph& g, double tol, int max_iter,
                                  RngStream* rng) {
  if (g.n < 1) throw std::invalid_argument("largest_eigenvalue: empty graph");
  const std::vector<int> comp = connected_components(g);
  const int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::vector<Vertex>> members(ncomp);
  for (Vertex v = 0; v < g.n; ++v) members[comp[v]].push_back(v);

  SpectralResult result;
  result.vector.assign(g.n, 0.0);
  result.lambda = 0.0;
  result.residual = 0.0;

  for (const auto& verts : members) {
    const std::size_t sz = verts.size();
    std::vector<int> local(g.n, -1);
    for (std::size_t t = 0; t < sz; ++t) local[verts[t]] = static_cast<int>(t);

    std::vector<double> x(sz, 1.0 / std::sqrt(static_cast<double>(sz)));
    std::vector<double> y(sz, 0.0);

    // The iteration matrix is the loop-inclusive adjacency plus the identity;
    // the shift is subtracted from the reported eigenvalue at the end.
    auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
      for (std::size_t t = 0; t < sz; ++t) {
        const Vertex v = verts[t];
        double acc = (g.loop[v] ? 2.0 : 1.0) * in[t];
        for (Vertex w : g.adj[v]) acc += in[local[w]];
        out[t] = acc;
      }
    };

    double ray_prev = 0.0;
    double rel_change = 0.0;
    bool converged = false;
    int it = 0;
    for (; it < max_iter; ++it) {
      apply(x, y);
      double ray = 0.0;
      for (std::size_t t = 0; t < sz; ++t) ray += x[t] * y[t];
      const double lam = ray - 1.0;
      rel_change = std::fabs(ray - ray_prev) / std::max(std::fabs(ray), 1e-300);

      // y - x is the unshifted matrix-vector product, so this is the
      // eigenpair residual for the reported eigenvalue.
      double resid = 0.0;
      for (std::size_t t = 0; t < sz; ++t) {
        resid = std::max(resid, std::fabs((y[t] - x[t]) - lam * x[t]));
      }

      double norm = 0.0;
      for (double v : y) norm += v * v;
      norm = std::sqrt(norm);
      if (norm == 0.0) {
        // Cannot happen for the shifted operator unless the iterate vanished;
        // restart from noise if a source is available.
        if (rng != nullptr) {
          for (auto& v : x) v = rng->uniform01() + 0.5;
          continue;
        }
        throw std::runtime_error("largest_eigenvalue: iterate collapsed to zero");
      }
      for (std::size_t t = 0; t < sz; ++t) x[t] = y[t] / norm;

      if (it > 0 && rel_change <= tol && resid <= tol * std::max(lam, 1.0)) {
        converged = true;
        ray_prev = ray;
        ++it;
        break;
      }
      ray_prev = ray;
    }
    result.iterations += it;
    if (!converged) {
      std::ostringstream msg;
      msg << "largest_eigenvalue: no convergence after " << max_iter
          << " iterations (relative change " << rel_change << ")";
      throw std::runtime_error(msg.str());
    }

    const double lam = ray_prev - 1.0;
    result.lambda = std::max(result.lambda, lam);
    result.residual = std::max(result.residual, rel_change);
    for (std::size_t t = 0; t < sz; ++t) {
      // Perron entries are nonnegative; clamp the tiny negative noise the
      // finite iteration can leave behind.
      result.vector[verts[t]] = std::max(x[t], 0.0);
    }
  }
  return result;
}

std::uint64_t walk_count(const Graph& g, Vertex i, Vertex j, int s) {
  if (i < 0 || i >= g.n || j < 0 || j >= g.n) {
    throw std::invalid_argument("walk_count: vertex out of range");
  }
  if (s < 1 || s > 4) throw std::invalid_argument("walk_count: length must be in {1,2,3,4}");
  std::vector<std::uint64_t> vec(g.n, 0), next(g.n, 0);
  vec[i] = 1;
  for (int step = 0; step < s; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (Vertex v = 0; v < g.n; ++v) {
      if (vec[v] == 0) continue;
      for (Vertex w : g.adj[v]) next[w] += vec[v];
    }
    vec.swap(next);
  }
  return vec[j];
}

Graph read_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("edge list: missing header");
  std::istringstream hs(header);
  long long n = 0, m = 0;
  if (!(hs >> n >> m) || n < 0 || m < 0) {
    throw std::invalid_argument("edge list: header must be \"n <edge count>\"");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  long long a = 0, b = 0;
  while (in >> a >> b) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  if (static_cast<long long>(edges.size()) != m) {
    throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
  }
  return from_edge_list(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.edge_count() << '\n';
  for (Vertex i = 0; i < g.n; ++i) {
    for (Vertex j : g.adj[i]) {
      if (i < j) out << i << ' ' << j << '\n';
    }
  }
}

Graph preferential_attachment(int n, int m, double r_exp, RngStream& rng) {
  if (m < 1 || n <= m) {
    throw std::invalid_argument("preferential_attachment: need n > m >= 1");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(n - m) * m);
  std::vector<int> deg(n, 0);
  std::vector<double> weight;
  for (Vertex t = m; t < n; ++t) {
    // Weights are frozen at the arrival of t; isolated vertices borrow the
    // minimum positive weight so they stay reachable.
    weight.assign(t, 0.0);
    double min_pos = 0.0;
    for (Vertex v = 0; v < t; ++v) {
      if (deg[v] > 0) {
        const double w = std::pow(static_cast<double>(deg[v]), r_exp);
        weight[v] = w;
        if (min_pos == 0.0 || w < min_pos) min_pos = w;
      }
    }
    if (min_pos == 0.0) min_pos = 1.0;
    for (Vertex v = 0; v < t; ++v) {
      if (deg[v] == 0) weight[v] = min_pos;
    }
    for (int e = 0; e < m; ++e) {
      double total = 0.0;
      for (Vertex v = 0; v < t; ++v) total += weight[v];
      const double x = rng.uniform01() * total;
      double cum = 0.0;
      Vertex target = t - 1;
      for (Vertex v = 0; v < t; ++v) {
        cum += weight[v];
        if (x < cum && weight[v] > 0.0) {
          target = v;
          break;
        }
      }
      edges.emplace_back(t, target);
      weight[target] = 0.0;  // no multi-edges
      ++deg[target];
    }
    deg[t] += m;
  }
  return from_edge_list(n, edges);
}

Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star: need n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
  return from_edge_list(n, edges);
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: need n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_edge_list(n, edges);
}

Graph clique(int n) {
  if (n < 1) throw std::invalid_argument("clique: need n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return from_edge_list(n, edges);
}

HubCliquesShape hub_cliques_shape(int n) {
  if (n < 2) throw std::invalid_argument("hub_cliques: need n >= 2");
  const double root = std::sqrt(static_cast<double>(n));
  const double logn = std::log(static_cast<double>(n));
  HubCliquesShape shape;
  const int m = static_cast<int>(std::ceil(root / logn));
  shape.block_size = static_cast<int>(std::ceil(root * logn));
  shape.hub = 0;
  shape.secondary_begin = 1;
  shape.blocks_begin = 1 + m;
  shape.total = 1 + m + n;
  return shape;
}

Graph hub_cliques(int n) {
  const HubCliquesShape s = hub_cliques_shape(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex b = s.blocks_begin; b < s.total; ++b) edges.emplace_back(s.hub, b);
  const int m = s.blocks_begin - s.secondary_begin;
  for (int k = 0; k < m; ++k) {
    const Vertex hub2 = s.secondary_begin + k;
    const long long lo = static_cast<long long>(k) * s.block_size;
    const long long hi = std::min<long long>(lo + s.block_size, n);
    for (long long b = lo; b < hi; ++b) {
      edges.emplace_back(hub2, s.blocks_begin + static_cast<Vertex>(b));
    }
  }
  return from_edge_list(s.total, edges);
}

Graph clique_of_cliques(int n) {
  if (n < 1) throw std::invalid_argument("clique_of_cliques: need n >= 1");
  const int s = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  const int total = s * s;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int c = 0; c < s; ++c) {
    const Vertex base = c * s;
    for (int i = 0; i < s; ++i) {
      for (int j = i + 1; j < s; ++j) edges.emplace_back(base + i, base + j);
    }
  }
  for (int c1 = 0; c1 < s; ++c1) {
    for (int c2 = c1 + 1; c2 < s; ++c2) edges.emplace_back(c1 * s, c2 * s);
  }
  return from_edge_list(total, edges);
}

}  // namespace cgd
