#include "cgd/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace cgd {

ImportanceOrdering ordering_from_order(const Graph& h, std::vector<Vertex> order) {
  if (static_cast<int>(order.size()) != h.n) {
    throw std::invalid_argument("ordering: order length must equal vertex count");
  }
  ImportanceOrdering ord;
  ord.pi.assign(h.n, 0);
  for (int t = 0; t < h.n; ++t) {
    const Vertex v = order[t];
    if (v < 0 || v >= h.n || ord.pi[v] != 0) {
      throw std::invalid_argument("ordering: order is not a permutation");
    }
    ord.pi[v] = t + 1;
  }
  ord.order = std::move(order);
  ord.before.assign(h.n, {});
  ord.after.assign(h.n, {});
  for (Vertex v = 0; v < h.n; ++v) {
    for (Vertex w : h.adj[v]) {
      (ord.pi[w] < ord.pi[v] ? ord.before[v] : ord.after[v]).push_back(w);
    }
  }
  return ord;
}

ImportanceOrdering eigenvector_ordering(const Graph& h, const SpectralResult& spec) {
  if (static_cast<int>(spec.vector.size()) != h.n) {
    throw std::invalid_argument("eigenvector_ordering: spectral result dimension mismatch");
  }
  const std::vector<int> comp = connected_components(h);
  const int ncomp = h.n == 0 ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::vector<Vertex>> members(ncomp);
  for (Vertex v = 0; v < h.n; ++v) members[comp[v]].push_back(v);

  std::vector<Vertex> order;
  order.reserve(h.n);
  for (auto& verts : members) {
    std::sort(verts.begin(), verts.end(), [&](Vertex a, Vertex b) {
      if (spec.vector[a] != spec.vector[b]) return spec.vector[a] > spec.vector[b];
      return a < b;
    });
    // Entries within relative tolerance of the group head form one tie
    // group; each group is emitted in vertex-id order.
    std::size_t start = 0;
    while (start < verts.size()) {
      const double head = spec.vector[verts[start]];
      std::size_t stop = start + 1;
      while (stop < verts.size()) {
        const double e = spec.vector[verts[stop]];
        if (std::fabs(head - e) > 1e-9 * std::max({std::fabs(head), std::fabs(e), 1e-300})) {
          break;
        }
        ++stop;
      }
      std::sort(verts.begin() + start, verts.begin() + stop);
      for (std::size_t t = start; t < stop; ++t) order.push_back(verts[t]);
      start = stop;
    }
  }
  return ordering_from_order(h, std::move(order));
}

ImportanceOrdering sequential_degree_ordering(const Graph& h) {
  std::vector<int> deg(h.n);
  for (Vertex v = 0; v < h.n; ++v) deg[v] = static_cast<int>(h.adj[v].size());

  using Entry = std::pair<int, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (Vertex v = 0; v < h.n; ++v) heap.emplace(deg[v], v);

  std::vector<std::uint8_t> removed(h.n, 0);
  std::vector<Vertex> order(h.n);
  int next_last = h.n - 1;
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (removed[v] || d != deg[v]) continue;  // stale heap entry
    removed[v] = 1;
    order[next_last--] = v;
    for (Vertex w : h.adj[v]) {
      if (!removed[w]) heap.emplace(--deg[w], w);
    }
  }
  return ordering_from_order(h, std::move(order));
}

bool verify_importance(const Graph& h, const ImportanceOrdering& ord, double lambda) {
  if (static_cast<int>(ord.before.size()) != h.n) {
    throw std::invalid_argument("verify_importance: ordering dimension mismatch");
  }
  std::size_t worst = 0;
  for (const auto& nb : ord.before) worst = std::max(worst, nb.size());
  return static_cast<double>(worst) <= lambda - 1.0 + 1e-9;
}

namespace {

// Cell index of v under the partition {A\B: 0, A∩B: 1, B\A: 2}; -1 outside.
int partition_cell(const std::vector<std::uint8_t>& in_a,
                   const std::vector<std::uint8_t>& in_b, Vertex v) {
  if (in_a[v]) return in_b[v] ? 1 : 0;
  return in_b[v] ? 2 : -1;
}

}  // namespace

std::uint64_t boundary_edges(const Graph& g, const std::vector<Vertex>& A,
                             const std::vector<Vertex>& B) {
  std::vector<std::uint8_t> in_a(g.n, 0), in_b(g.n, 0);
  for (Vertex v : A) in_a.at(v) = 1;
  for (Vertex v : B) in_b.at(v) = 1;
  std::uint64_t count = 0;
  for (Vertex u = 0; u < g.n; ++u) {
    const int cu = partition_cell(in_a, in_b, u);
    if (cu < 0) continue;
    for (Vertex w : g.adj[u]) {
      if (w <= u) continue;
      const int cw = partition_cell(in_a, in_b, w);
      if (cw >= 0 && cw != cu) ++count;
    }
  }
  return count;
}

std::uint64_t common_parent_products(const Graph& g, const ImportanceOrdering& ord,
                                     const std::vector<Vertex>& A,
                                     const std::vector<Vertex>& B) {
  if (static_cast<int>(ord.pi.size()) != g.n) {
    throw std::invalid_argument("common_parent_products: ordering dimension mismatch");
  }
  std::vector<std::uint8_t> in_a(g.n, 0), in_b(g.n, 0);
  for (Vertex v : A) in_a.at(v) = 1;
  for (Vertex v : B) in_b.at(v) = 1;
  std::uint64_t total = 0;
  for (Vertex k = 0; k < g.n; ++k) {
    if (in_a[k] || in_b[k]) continue;
    std::uint64_t ca = 0, cb = 0;
    for (Vertex w : g.adj[k]) {
      if (ord.pi[w] <= ord.pi[k]) continue;  // only children count
      if (in_a[w]) ++ca;
      if (in_b[w]) ++cb;
    }
    total += ca * cb;
  }
  return total;
}

}  // namespace cgd
