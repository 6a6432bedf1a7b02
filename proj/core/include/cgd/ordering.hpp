// Importance orderings over the conflict graph and the directed
// parent/child combinatorics they induce. An importance ordering keeps
// every vertex's count of more-important neighbors at or below
// lambda(H) - 1, the property the sampler's probability bounds rest on.
#ifndef CGD_ORDERING_HPP
#define CGD_ORDERING_HPP

#include <cstdint>
#include <vector>

#include "cgd/graph.hpp"

namespace cgd {

struct ImportanceOrdering {
  // pi[v] is the 1-based position of v; position 1 is the most important.
  std::vector<int> pi;
  // Vertices listed from most to least important.
  std::vector<Vertex> order;
  // before[v]: neighbors of v placed earlier than v (sorted by id).
  std::vector<std::vector<Vertex>> before;
  // after[v]: neighbors of v placed later than v (sorted by id).
  std::vector<std::vector<Vertex>> after;
};

// Builds the position, before, and after tables from an importance order.
ImportanceOrdering ordering_from_order(const Graph& h, std::vector<Vertex> order);

// Sorts each connected component by Perron-vector entry descending. Entries
// within relative tolerance 1e-9 form a tie group ordered by vertex id.
// Components are concatenated in ascending order of their minimum vertex.
ImportanceOrdering eigenvector_ordering(const Graph& h, const SpectralResult& spec);

// Repeatedly removes a minimum-degree vertex (ties by id, degrees without
// self-loops), assigning it the last open position. Runs in
// O((n + m) log n) with a lazy-deletion heap.
ImportanceOrdering sequential_degree_ordering(const Graph& h);

// Checks max_i |before[i]| <= lambda - 1 + 1e-9.
bool verify_importance(const Graph& h, const ImportanceOrdering& ord, double lambda);

// Number of edges inside A ∪ B whose endpoints lie in different cells of
// the partition {A\B, A∩B, B\A}. Self-loops never cross cells.
std::uint64_t boundary_edges(const Graph& g, const std::vector<Vertex>& A,
                             const std::vector<Vertex>& B);

// Sum over vertices k outside A ∪ B of |children(k) ∩ A| * |children(k) ∩ B|,
// where children are the neighbors of k placed later than k by ord.
std::uint64_t common_parent_products(const Graph& g, const ImportanceOrdering& ord,
                                     const std::vector<Vertex>& A,
                                     const std::vector<Vertex>& B);

}  // namespace cgd

#endif  // CGD_ORDERING_HPP
