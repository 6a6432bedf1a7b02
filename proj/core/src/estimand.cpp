#include "cgd/estimand.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace cgd {

namespace {

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex i) {
  std::vector<Vertex> nb = g.adj[i];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), i), i);
  return nb;
}

bool sorted_contains(const std::vector<Vertex>& v, Vertex x) {
  return std::binary_search(v.begin(), v.end(), x);
}

bool sorted_intersects(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

// Treated set induced by a sparse intervention on the closed neighborhood.
std::vector<Vertex> treated_of_sparse(const Graph& g, Vertex i,
                                      const SparseIntervention& zi) {
  const std::vector<Vertex> nb = closed_neighborhood(g, i);
  std::vector<Vertex> treated;
  for (const auto& [u, bit] : zi) {
    if (!sorted_contains(nb, u)) {
      throw std::invalid_argument(
          "custom estimand: unit " + std::to_string(i) + " sets coordinate " +
          std::to_string(u) + " outside its closed neighborhood");
    }
    if (bit > 1) throw std::invalid_argument("custom estimand: bit must be 0 or 1");
    if (bit == 1) treated.push_back(u);
  }
  std::sort(treated.begin(), treated.end());
  treated.erase(std::unique(treated.begin(), treated.end()), treated.end());
  return treated;
}

}  // namespace

Estimand gate_estimand() {
  Estimand est;
  est.kind = EstimandKind::GATE;
  return est;
}

Estimand direct_effect_estimand() {
  Estimand est;
  est.kind = EstimandKind::DirectEffect;
  return est;
}

Estimand spillover_estimand(std::vector<std::vector<Vertex>> seeds) {
  Estimand est;
  est.kind = EstimandKind::SpillOver;
  est.seeds = std::move(seeds);
  for (auto& m : est.seeds) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  return est;
}

Estimand custom_estimand(std::vector<SparseIntervention> z1,
                         std::vector<SparseIntervention> z0) {
  Estimand est;
  est.kind = EstimandKind::Custom;
  est.z1 = std::move(z1);
  est.z0 = std::move(z0);
  return est;
}

void validate_estimand(const Graph& g, const Estimand& est) {
  switch (est.kind) {
    case EstimandKind::GATE:
    case EstimandKind::DirectEffect:
      return;
    case EstimandKind::SpillOver: {
      if (static_cast<int>(est.seeds.size()) != g.n) {
        throw std::invalid_argument("spillover estimand: need one seed set per unit");
      }
      for (Vertex i = 0; i < g.n; ++i) {
        const auto& m = est.seeds[i];
        if (m.empty()) {
          throw std::invalid_argument("spillover estimand: empty seed set for unit " +
                                      std::to_string(i));
        }
        for (Vertex u : m) {
          if (u == i || u < 0 || u >= g.n || !g.has_edge(i, u)) {
            throw std::invalid_argument(
                "spillover estimand: seed " + std::to_string(u) +
                " is not a neighbor of unit " + std::to_string(i));
          }
        }
      }
      return;
    }
    case EstimandKind::Custom: {
      if (static_cast<int>(est.z1.size()) != g.n ||
          static_cast<int>(est.z0.size()) != g.n) {
        throw std::invalid_argument("custom estimand: need z1 and z0 entries per unit");
      }
      for (Vertex i = 0; i < g.n; ++i) {
        const auto t1 = treated_of_sparse(g, i, est.z1[i]);
        const auto t0 = treated_of_sparse(g, i, est.z0[i]);
        if (t1 == t0) {
          throw std::invalid_argument(
              "custom estimand: unit " + std::to_string(i) +
              " has identical contrasted exposures");
        }
      }
      return;
    }
  }
  throw std::invalid_argument("estimand: unknown kind");
}

Exposure exposure_of(const Graph& g, Vertex i, const std::vector<std::uint8_t>& z) {
  if (static_cast<int>(z.size()) != g.n) {
    throw std::invalid_argument("exposure_of: intervention length mismatch");
  }
  Exposure e;
  for (Vertex u : closed_neighborhood(g, i)) {
    if (z[u]) e.treated.push_back(u);
  }
  return e;
}

std::pair<Exposure, Exposure> contrastive_exposures(const Graph& g, const Estimand& est,
                                                    Vertex i) {
  if (i < 0 || i >= g.n) throw std::invalid_argument("contrastive_exposures: bad unit");
  Exposure e1, e0;
  switch (est.kind) {
    case EstimandKind::GATE:
      e1.treated = closed_neighborhood(g, i);
      break;
    case EstimandKind::DirectEffect:
      e1.treated = {i};
      break;
    case EstimandKind::SpillOver: {
      if (static_cast<int>(est.seeds.size()) != g.n || est.seeds[i].empty()) {
        throw std::invalid_argument("spillover estimand: missing seed set for unit " +
                                    std::to_string(i));
      }
      for (Vertex u : est.seeds[i]) {
        if (u == i || u < 0 || u >= g.n || !g.has_edge(i, u)) {
          throw std::invalid_argument(
              "spillover estimand: seed " + std::to_string(u) +
              " is not a neighbor of unit " + std::to_string(i));
        }
      }
      e1.treated = est.seeds[i];
      break;
    }
    case EstimandKind::Custom:
      if (static_cast<int>(est.z1.size()) != g.n ||
          static_cast<int>(est.z0.size()) != g.n) {
        throw std::invalid_argument("custom estimand: need z1 and z0 entries per unit");
      }
      e1.treated = treated_of_sparse(g, i, est.z1[i]);
      e0.treated = treated_of_sparse(g, i, est.z0[i]);
      break;
  }
  return {std::move(e1), std::move(e0)};
}

ContrastTable contrast_table(const Graph& g, const Estimand& est) {
  validate_estimand(g, est);
  ContrastTable table;
  table.nbhd.resize(g.n);
  table.e1.resize(g.n);
  table.e0.resize(g.n);
  for (Vertex i = 0; i < g.n; ++i) {
    table.nbhd[i] = closed_neighborhood(g, i);
    auto [e1, e0] = contrastive_exposures(g, est, i);
    table.e1[i] = std::move(e1);
    table.e0[i] = std::move(e0);
  }
  return table;
}

namespace {

// Exposures pin the full assignment on their unit's closed neighborhood, so
// two pinned assignments disagree exactly when some shared coordinate is
// treated under one and untreated under the other.
bool pins_disagree(const std::vector<Vertex>& nb_i, const std::vector<Vertex>& treat_i,
                   const std::vector<Vertex>& nb_j, const std::vector<Vertex>& treat_j) {
  auto ia = nb_i.begin();
  auto ib = nb_j.begin();
  while (ia != nb_i.end() && ib != nb_j.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      const bool bit_i = sorted_contains(treat_i, *ia);
      const bool bit_j = sorted_contains(treat_j, *ia);
      if (bit_i != bit_j) return true;
      ++ia;
      ++ib;
    }
  }
  return false;
}

bool conflict_from_table(const ContrastTable& t, Vertex i, Vertex j) {
  if (i == j) return true;
  const std::vector<Vertex>* ti[2] = {&t.e1[i].treated, &t.e0[i].treated};
  const std::vector<Vertex>* tj[2] = {&t.e1[j].treated, &t.e0[j].treated};
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      if (pins_disagree(t.nbhd[i], *ti[k], t.nbhd[j], *tj[l])) return true;
    }
  }
  return false;
}

}  // namespace

bool conflict(const Graph& g, const Estimand& est, Vertex i, Vertex j) {
  if (i < 0 || i >= g.n || j < 0 || j >= g.n) {
    throw std::invalid_argument("conflict: vertex out of range");
  }
  if (i == j) return true;
  const std::vector<Vertex> nb_i = closed_neighborhood(g, i);
  const std::vector<Vertex> nb_j = closed_neighborhood(g, j);
  auto [e1_i, e0_i] = contrastive_exposures(g, est, i);
  auto [e1_j, e0_j] = contrastive_exposures(g, est, j);
  const std::vector<Vertex>* ti[2] = {&e1_i.treated, &e0_i.treated};
  const std::vector<Vertex>* tj[2] = {&e1_j.treated, &e0_j.treated};
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      if (pins_disagree(nb_i, *ti[k], nb_j, *tj[l])) return true;
    }
  }
  return false;
}

Graph build_conflict_graph(const Graph& g, const Estimand& est) {
  validate_estimand(g, est);
  switch (est.kind) {
    case EstimandKind::DirectEffect: {
      Graph h = g;
      std::fill(h.loop.begin(), h.loop.end(), std::uint8_t{1});
      return h;
    }
    case EstimandKind::GATE:
      return power_graph_two(g);
    case EstimandKind::SpillOver: {
      // Treating M_i pins ones there and zeros on the rest of the closed
      // neighborhood, so i and j conflict exactly when one's seed set meets
      // the other's closed neighborhood.
      std::vector<std::pair<Vertex, Vertex>> edges;
      const Graph two_hop = power_graph_two(g);
      std::vector<std::vector<Vertex>> closed(g.n);
      for (Vertex i = 0; i < g.n; ++i) closed[i] = closed_neighborhood(g, i);
      for (Vertex i = 0; i < g.n; ++i) {
        for (Vertex j : two_hop.adj[i]) {
          if (j <= i) continue;
          if (sorted_intersects(est.seeds[i], closed[j]) ||
              sorted_intersects(est.seeds[j], closed[i])) {
            edges.emplace_back(i, j);
          }
        }
      }
      return from_edge_list(g.n, edges, true);
    }
    case EstimandKind::Custom: {
      const ContrastTable table = contrast_table(g, est);
      const Graph two_hop = power_graph_two(g);
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (Vertex i = 0; i < g.n; ++i) {
        for (Vertex j : two_hop.adj[i]) {
          if (j <= i) continue;
          if (conflict_from_table(table, i, j)) edges.emplace_back(i, j);
        }
      }
      return from_edge_list(g.n, edges, true);
    }
  }
  throw std::invalid_argument("estimand: unknown kind");
}

Estimand estimand_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("estimand json: need an object with a \"kind\" string");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "gate") return gate_estimand();
  if (kind == "direct") return direct_effect_estimand();
  if (kind == "spillover") {
    if (!j.contains("seeds") || !j["seeds"].is_array()) {
      throw std::invalid_argument("estimand json: spillover needs a \"seeds\" array");
    }
    std::vector<std::vector<Vertex>> seeds;
    for (const auto& row : j["seeds"]) {
      if (!row.is_array()) {
        throw std::invalid_argument("estimand json: each seed entry must be an array");
      }
      seeds.push_back(row.get<std::vector<Vertex>>());
    }
    return spillover_estimand(std::move(seeds));
  }
  if (kind == "custom") {
    auto parse_side = [&](const char* key) {
      if (!j.contains(key) || !j[key].is_array()) {
        throw std::invalid_argument(std::string("estimand json: custom needs a \"") +
                                    key + "\" array");
      }
      std::vector<SparseIntervention> side;
      for (const auto& row : j[key]) {
        if (!row.is_array()) {
          throw std::invalid_argument("estimand json: each unit entry must be an array");
        }
        SparseIntervention zi;
        for (const auto& pair : row) {
          if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument(
                "estimand json: custom coordinates are [unit, bit] pairs");
          }
          zi.emplace_back(pair[0].get<Vertex>(),
                          static_cast<std::uint8_t>(pair[1].get<int>()));
        }
        side.push_back(std::move(zi));
      }
      return side;
    };
    return custom_estimand(parse_side("z1"), parse_side("z0"));
  }
  throw std::invalid_argument("estimand json: unknown kind \"" + kind + "\"");
}

nlohmann::json estimand_to_json(const Estimand& est) {
  nlohmann::json j;
  switch (est.kind) {
    case EstimandKind::GATE:
      j["kind"] = "gate";
      break;
    case EstimandKind::DirectEffect:
      j["kind"] = "direct";
      break;
    case EstimandKind::SpillOver: {
      j["kind"] = "spillover";
      j["seeds"] = est.seeds;
      break;
    }
    case EstimandKind::Custom: {
      j["kind"] = "custom";
      auto dump_side = [](const std::vector<SparseIntervention>& side) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& zi : side) {
          nlohmann::json row = nlohmann::json::array();
          for (const auto& [u, bit] : zi) {
            row.push_back(nlohmann::json::array({u, static_cast<int>(bit)}));
          }
          rows.push_back(std::move(row));
        }
        return rows;
      };
      j["z1"] = dump_side(est.z1);
      j["z0"] = dump_side(est.z0);
      break;
    }
  }
  return j;
}

Estimand parse_estimand_arg(const std::string& arg) {
  if (arg == "gate") return gate_estimand();
  if (arg == "direct") return direct_effect_estimand();
  std::ifstream in(arg);
  if (!in) {
    throw std::invalid_argument("estimand: \"" + arg +
                                "\" is neither a known name nor a readable file");
  }
  nlohmann::json j;
  in >> j;
  return estimand_from_json(j);
}

}  // namespace cgd
