// Undirected simple graph with optional per-vertex self-loops, the spectral
// routine used for conflict graphs, and small combinatorial helpers. The
// self-loop never appears in the neighbor lists; it is carried as a flag and
// contributes to degrees and to the adjacency operator.
#ifndef CGD_GRAPH_HPP
#define CGD_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cgd {

class RngStream;

using Vertex = int;

struct Graph {
  int n = 0;
  std::vector<std::vector<Vertex>> adj;  // sorted, deduplicated, no self entries
  std::vector<std::uint8_t> loop;        // self-loop flag per vertex

  // Loop-free adjacency query by binary search.
  bool has_edge(Vertex i, Vertex j) const;

  // Degree counting the self-loop flag.
  int degree(Vertex i) const {
    return static_cast<int>(adj[i].size()) + (loop[i] ? 1 : 0);
  }

  int max_degree() const;
  std::size_t edge_count() const;  // loop-free undirected edges
};

// Builds a symmetric, deduplicated graph. Rejects out-of-range endpoints and
// explicit i == i pairs; self-loops enter only through the flag set.
Graph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                     bool all_self_loops = false);

Graph with_all_self_loops(Graph g);

// Distance-at-most-2 graph: edge (i,j) iff d_G(i,j) <= 2 and i != j, with
// self-loops set on every vertex.
Graph power_graph_two(const Graph& g);

struct SpectralResult {
  double lambda = 0.0;             // largest eigenvalue over all components
  std::vector<double> vector;      // Perron entries, unit 2-norm per component
  int iterations = 0;              // total across components
  double residual = 0.0;           // worst final relative Rayleigh change
};

// Power iteration on the loop-inclusive adjacency, run per connected
// component from the normalized all-ones vector. Internally iterates with an
// extra +1 diagonal shift (removed from the reported value) so bipartite
// loop-free graphs cannot oscillate between the +/- dominant pair. The
// optional rng is only consulted to perturb a stalled iterate.
SpectralResult largest_eigenvalue(const Graph& g, double tol = 1e-10,
                                  int max_iter = 100000,
                                  RngStream* rng = nullptr);

// Number of undirected walks of length s between i and j, computed on the
// simple graph without self-loops. s must lie in {1,2,3,4}.
std::uint64_t walk_count(const Graph& g, Vertex i, Vertex j, int s);

// Component id per vertex; ids are assigned in ascending order of the
// component's minimum vertex.
std::vector<int> connected_components(const Graph& g);

// Text format: first line "n <edge count>", then one "i j" pair per line,
// 0-indexed. Self-loop flags are never stored; the downstream estimand
// implies them.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

// Generators. Preferential attachment starts from m isolated vertices; each
// arrival attaches m distinct edges sampled proportional to degree^r_exp,
// where degree-0 vertices get the minimum positive weight in the pool (all
// weights equal when every degree is zero).
Graph preferential_attachment(int n, int m, double r_exp, RngStream& rng);
Graph star(int n);
Graph path(int n);
Graph clique(int n);

// Hub-and-blocks graph: one hub adjacent to all n block vertices, plus
// ceil(sqrt(n)/log n) secondary hubs each adjacent to a disjoint block of
// ceil(sqrt(n)*log n) block vertices. Vertex layout: 0 is the hub, then the
// secondary hubs, then the n block vertices.
Graph hub_cliques(int n);

struct HubCliquesShape {
  int total = 0;            // vertex count of the generated graph
  int hub = 0;              // main hub vertex
  int secondary_begin = 0;  // secondary hubs in [secondary_begin, blocks_begin)
  int blocks_begin = 0;     // block vertices in [blocks_begin, total)
  int block_size = 0;       // block size t_n
};
HubCliquesShape hub_cliques_shape(int n);

// ceil(sqrt(n)) cliques of size ceil(sqrt(n)); the first vertex of each
// clique is its representative and representatives are pairwise connected.
Graph clique_of_cliques(int n);

}  // namespace cgd

#endif  // CGD_GRAPH_HPP
