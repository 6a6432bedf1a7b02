// Contrastive interventions, exposure mappings, the pairwise conflict
// predicate, and conflict-graph construction. An exposure pins the entire
// assignment on the closed neighborhood of its unit: treated coordinates are
// 1 and every other coordinate of the neighborhood is 0.
#ifndef CGD_ESTIMAND_HPP
#define CGD_ESTIMAND_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cgd/graph.hpp"

namespace cgd {

enum class EstimandKind { GATE, DirectEffect, SpillOver, Custom };

// Sparse per-unit intervention: explicit (unit, bit) pairs on the closed
// neighborhood, everything absent defaulting to 0.
using SparseIntervention = std::vector<std::pair<Vertex, std::uint8_t>>;

struct Estimand {
  EstimandKind kind = EstimandKind::DirectEffect;
  // SpillOver only: nonempty seed sets M_i, one per unit, each a subset of
  // the open neighborhood of its unit.
  std::vector<std::vector<Vertex>> seeds;
  // Custom only: the two contrasted interventions per unit.
  std::vector<SparseIntervention> z1;
  std::vector<SparseIntervention> z0;
};

Estimand gate_estimand();
Estimand direct_effect_estimand();
Estimand spillover_estimand(std::vector<std::vector<Vertex>> seeds);
Estimand custom_estimand(std::vector<SparseIntervention> z1,
                         std::vector<SparseIntervention> z0);

// Throws std::invalid_argument when the estimand does not fit the graph:
// wrong per-unit counts, spill-over seeds empty or outside the open
// neighborhood, custom coordinates outside the closed neighborhood, or a
// unit whose two interventions induce the same exposure.
void validate_estimand(const Graph& g, const Estimand& est);

struct Exposure {
  std::vector<Vertex> treated;  // sorted subset of the closed neighborhood

  bool operator==(const Exposure& other) const { return treated == other.treated; }
};

// d_i(z): the treated members of the closed neighborhood of i.
Exposure exposure_of(const Graph& g, Vertex i, const std::vector<std::uint8_t>& z);

// The two contrasted exposures (e1, e0) of unit i under the estimand.
std::pair<Exposure, Exposure> contrastive_exposures(const Graph& g, const Estimand& est,
                                                    Vertex i);

// Precomputed per-unit closed neighborhoods and both contrasted exposures,
// the form consumed by the sampler and the probability formulas.
struct ContrastTable {
  std::vector<std::vector<Vertex>> nbhd;  // sorted closed neighborhood per unit
  std::vector<Exposure> e1;
  std::vector<Exposure> e0;
};

ContrastTable contrast_table(const Graph& g, const Estimand& est);

// Units i and j conflict when some pair of their contrasted exposures pins
// contradictory bits on a shared neighborhood coordinate. A unit always
// conflicts with itself because its two exposures differ.
bool conflict(const Graph& g, const Estimand& est, Vertex i, Vertex j);

// The conflict graph H: an edge per conflicting pair and a self-loop on
// every vertex. Closed forms cover the named estimands; custom estimands
// run the pairwise predicate over pairs within distance 2, the only pairs
// whose closed neighborhoods can meet.
Graph build_conflict_graph(const Graph& g, const Estimand& est);

// JSON round trip. Schema: {"kind": "gate"|"direct"|"spillover"|"custom",
// "seeds": [[unit,...] per unit], "z1"/"z0": [[[unit,bit],...] per unit]}.
Estimand estimand_from_json(const nlohmann::json& j);
nlohmann::json estimand_to_json(const Estimand& est);

// Accepts the literal names "gate" and "direct", otherwise treats the
// argument as a path to a JSON estimand file.
Estimand parse_estimand_arg(const std::string& arg);

}  // namespace cgd

#endif  // CGD_ESTIMAND_HPP
