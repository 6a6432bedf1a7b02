#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cgd/design.hpp"
#include "cgd/estimand.hpp"
#include "cgd/estimator.hpp"
#include "cgd/graph.hpp"
#include "cgd/oracle.hpp"
#include "cgd/ordering.hpp"
#include "cgd/rng.hpp"

#include "helpers.hpp"

using namespace cgd;

namespace {

struct Setup {
  Graph g;
  Estimand est;
  Graph h;
  ImportanceOrdering ord;
  DesignParams params;
};

Setup make(const Graph& g, const Estimand& est, double r) {
  Setup s{g, est, build_conflict_graph(g, est), {}, {}};
  const SpectralResult spec = largest_eigenvalue(s.h);
  s.ord = eigenvector_ordering(s.h, spec);
  s.params = DesignParams{r, spec.lambda};
  return s;
}

}  // namespace

TEST_CASE("single unit distribution collapses at r lambda = 1") {
  Setup s = make(from_edge_list(1, {}), direct_effect_estimand(), 1.0);
  const OracleDistribution dist = enumerate_design(s.g, s.est, s.h, s.ord, s.params);
  REQUIRE(dist.atoms.size() == 3);
  CHECK(dist.atoms[0].u[0] == Desire::E1);
  CHECK(dist.atoms[0].prob == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(dist.atoms[0].z == std::vector<std::uint8_t>{1});
  CHECK(dist.atoms[1].u[0] == Desire::E0);
  CHECK(dist.atoms[1].prob == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(dist.atoms[1].z == std::vector<std::uint8_t>{0});
  CHECK(dist.atoms[2].u[0] == Desire::Star);
  CHECK(dist.atoms[2].prob == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("atom count order and mass") {
  Setup s = make(clique(3), direct_effect_estimand(), 2.0);
  const OracleDistribution dist = enumerate_design(s.g, s.est, s.h, s.ord, s.params);
  REQUIRE(dist.atoms.size() == 27);
  // Lexicographic in u with e1 < e0 < *, coordinate 0 most significant.
  CHECK(dist.atoms[0].u == std::vector<Desire>(3, Desire::E1));
  CHECK(dist.atoms[1].u ==
        std::vector<Desire>{Desire::E1, Desire::E1, Desire::E0});
  CHECK(dist.atoms[26].u == std::vector<Desire>(3, Desire::Star));
  double mass = 0.0;
  for (const OracleAtom& atom : dist.atoms) {
    mass += atom.prob;
    REQUIRE(atom.z == realize(contrast_table(s.g, s.est), s.ord, atom.u));
  }
  CHECK(std::fabs(mass - 1.0) < 1e-12);
}

TEST_CASE("triangle event probability at r = 2") {
  Setup s = make(clique(3), direct_effect_estimand(), 2.0);
  REQUIRE(s.params.lambda == doctest::Approx(3.0));
  const OracleDistribution dist = enumerate_design(s.g, s.est, s.h, s.ord, s.params);
  auto fires = [&](const OracleAtom& atom) {
    return desired_event(0, 1, atom.u, s.ord) ? 1.0 : 0.0;
  };
  CHECK(oracle_expectation(dist, fires) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
}

TEST_CASE("marginals of each coordinate match the trit measure") {
  RngStream rng(501, 0);
  Setup s = make(cgdtest::erdos_renyi(6, 0.4, rng), gate_estimand(), 1.7);
  const OracleDistribution dist = enumerate_design(s.g, s.est, s.h, s.ord, s.params);
  for (int i = 0; i < s.g.n; ++i) {
    for (int val = 0; val < 3; ++val) {
      auto hit = [&](const OracleAtom& atom) {
        return atom.u[i] == static_cast<Desire>(val) ? 1.0 : 0.0;
      };
      const double expect =
          val == 2 ? s.params.star_prob() : s.params.fire_prob();
      REQUIRE(std::fabs(oracle_expectation(dist, hit) - expect) < 1e-12);
    }
  }
}

TEST_CASE("log space products keep the mass at one") {
  const Graph g = path(10);
  Setup s = make(g, direct_effect_estimand(), 2.0);
  const OracleDistribution dist = enumerate_design(s.g, s.est, s.h, s.ord, s.params);
  REQUIRE(dist.atoms.size() == 59049);
  Accumulator mass;
  for (const OracleAtom& atom : dist.atoms) mass.add(atom.prob);
  CHECK(std::fabs(mass.value() - 1.0) < 1e-12);
}

TEST_CASE("enumeration bounds") {
  Setup s = make(path(3), direct_effect_estimand(), 2.0);
  Graph big = path(13);
  CHECK_THROWS_AS(enumerate_design(big, s.est, build_conflict_graph(big, s.est),
                                   sequential_degree_ordering(
                                       build_conflict_graph(big, s.est)),
                                   DesignParams{2.0, 3.0}),
                  std::invalid_argument);
  // A conflicting graph with no star mass has no valid design.
  CHECK_THROWS_AS(enumerate_design(s.g, s.est, s.h, s.ord,
                                   DesignParams{1.0 / s.params.lambda,
                                                s.params.lambda}),
                  std::invalid_argument);
}

TEST_CASE("moment helpers") {
  Setup s = make(path(3), direct_effect_estimand(), 2.0);
  const OracleDistribution dist = enumerate_design(s.g, s.est, s.h, s.ord, s.params);
  auto c = [](const OracleAtom&) { return 4.25; };
  CHECK(oracle_expectation(dist, c) == doctest::Approx(4.25).epsilon(1e-14));
  CHECK(oracle_variance(dist, c) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  auto treated_count = [](const OracleAtom& atom) {
    double t = 0.0;
    for (std::uint8_t b : atom.z) t += b;
    return t;
  };
  const double var = oracle_variance(dist, treated_count);
  CHECK(var == doctest::Approx(oracle_covariance(dist, treated_count, treated_count))
                   .epsilon(1e-12));
  CHECK(var > 0.0);
}

TEST_CASE("exact exposure probabilities") {
  Setup s = make(path(3), direct_effect_estimand(), 2.0);
  const OracleDistribution dist = enumerate_design(s.g, s.est, s.h, s.ord, s.params);
  const ExposureProbs probs = exact_exposure_probs(dist, s.g, s.est);
  const ContrastTable table = contrast_table(s.g, s.est);
  for (int i = 0; i < s.g.n; ++i) {
    auto realizes = [&](const OracleAtom& atom, const Exposure& e) {
      return exposure_of(s.g, i, atom.z) == e ? 1.0 : 0.0;
    };
    auto e1hit = [&](const OracleAtom& a) { return realizes(a, table.e1[i]); };
    auto e0hit = [&](const OracleAtom& a) { return realizes(a, table.e0[i]); };
    REQUIRE(std::fabs(probs.p1[i] - oracle_expectation(dist, e1hit)) < 1e-13);
    REQUIRE(std::fabs(probs.p0[i] - oracle_expectation(dist, e0hit)) < 1e-13);
    // For the direct effect the e1 exposure is exactly the desired event.
    CHECK(probs.p1[i] ==
          doctest::Approx(prob_single(i, 1, s.ord, s.params)).epsilon(1e-12));
    // The all-control exposure also happens by accident, so it dominates
    // the event probability strictly.
    CHECK(probs.p0[i] > prob_single(i, 0, s.ord, s.params) + 1e-9);
  }

  // Edgeless at r = 1: exposures are coin flips.
  Setup lone = make(from_edge_list(2, {}), direct_effect_estimand(), 1.0);
  const ExposureProbs fair = exact_exposure_probs(
      enumerate_design(lone.g, lone.est, lone.h, lone.ord, lone.params), lone.g,
      lone.est);
  CHECK(fair.p1[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(fair.p0[1] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("enumeration is deterministic") {
  RngStream rng(502, 0);
  Setup s = make(cgdtest::erdos_renyi(5, 0.5, rng), gate_estimand(), 2.0);
  const OracleDistribution a = enumerate_design(s.g, s.est, s.h, s.ord, s.params);
  const OracleDistribution b = enumerate_design(s.g, s.est, s.h, s.ord, s.params);
  REQUIRE(a.atoms.size() == b.atoms.size());
  for (std::size_t t = 0; t < a.atoms.size(); ++t) {
    REQUIRE(a.atoms[t].u == b.atoms[t].u);
    REQUIRE(a.atoms[t].z == b.atoms[t].z);
    REQUIRE(a.atoms[t].prob == b.atoms[t].prob);
  }
}
