#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "minoru/fixtures.hpp"
#include "minoru/verify.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

using namespace minoru;

namespace {

std::set<ViolationKind> kinds_of(const std::vector<Violation>& violations) {
  std::set<ViolationKind> out;
  for (const auto& v : violations) out.insert(v.kind);
  return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(static_cast<VertexId>(i));
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  return g;
}

PolygonalEmbedding hexagon(const std::string& word, std::vector<VertexId> corner_order) {
  std::map<VertexId, std::pair<double, double>> coords;
  std::vector<std::pair<VertexId, VertexId>> edges{{1, 4}, {1, 5}, {2, 4}};
  for (VertexId i = 0; i < 6; ++i) {
    const double a = std::numbers::pi * static_cast<double>(i) / 3;
    coords[i] = {std::cos(a), std::sin(a)};
    edges.emplace_back(i, (i + 1) % 6);
  }
  return PolygonalEmbedding(plane_graph_from_drawing(coords, edges), std::move(corner_order), Signature::parse(word));
}

Witness path_in_cycle() {
  Witness w;
  w.branch_sets[0] = {0, 1};
  w.branch_sets[1] = {2};
  w.branch_sets[2] = {3, 4, 5};
  return w;
}

}  // namespace

TEST(VerifyWitness, AcceptsContractedCycle) {
  EXPECT_TRUE(verify_witness(oracle::cycle_graph(3), oracle::cycle_graph(6), path_in_cycle()).empty());
}

TEST(VerifyWitness, ReportsEachKind) {
  const Graph triangle = oracle::cycle_graph(3);
  const Graph hexagon_cycle = oracle::cycle_graph(6);

  Witness empty = path_in_cycle();
  empty.branch_sets[1].clear();
  EXPECT_TRUE(kinds_of(verify_witness(triangle, hexagon_cycle, empty)).count(ViolationKind::kEmptyBranch));

  Witness missing = path_in_cycle();
  missing.branch_sets.erase(2);
  EXPECT_TRUE(kinds_of(verify_witness(triangle, hexagon_cycle, missing)).count(ViolationKind::kEmptyBranch));

  Witness overlap = path_in_cycle();
  overlap.branch_sets[1].insert(1);
  EXPECT_TRUE(kinds_of(verify_witness(triangle, hexagon_cycle, overlap)).count(ViolationKind::kOverlap));

  Witness split = path_in_cycle();
  split.branch_sets[0] = {0, 2};
  split.branch_sets[1] = {1};
  EXPECT_TRUE(
      kinds_of(verify_witness(triangle, hexagon_cycle, split)).count(ViolationKind::kDisconnectedBranch));

  Witness gap = path_in_cycle();
  gap.branch_sets[2] = {4, 5};
  EXPECT_EQ(kinds_of(verify_witness(triangle, hexagon_cycle, gap)),
            (std::set<ViolationKind>{ViolationKind::kMissingEdge}));

  Witness stranger = path_in_cycle();
  stranger.branch_sets[2].insert(40);
  EXPECT_TRUE(kinds_of(verify_witness(triangle, hexagon_cycle, stranger)).count(ViolationKind::kUnknownVertex));
}

TEST(Bruteforce, AgreesWithPartitionOracle) {
  std::mt19937_64 rng(fixtures::seed_from_env());
  std::size_t positives = 0;
  for (int round = 0; round < 60; ++round) {
    const Graph major = random_graph(rng, 5 + round % 4, 0.45);
    const Graph minor = random_graph(rng, 3 + round % 3, 0.6);
    const bool expected = oracle::minor_by_partitions(minor, major);
    EXPECT_EQ(is_minor_bruteforce(minor, major), expected) << "round " << round;
    const auto found = find_minor_bruteforce(minor, major);
    EXPECT_EQ(found.has_value(), expected);
    if (found) {
      ++positives;
      EXPECT_TRUE(verify_witness(minor, major, *found).empty());
    }
  }
  EXPECT_GT(positives, 0u);
  EXPECT_LT(positives, 60u);
}

TEST(Bruteforce, ClassicalPlanarFacts) {
  const Graph octahedron = fixtures::octahedron().skeleton();
  EXPECT_TRUE(is_minor_bruteforce(oracle::complete_graph(4), octahedron));
  EXPECT_FALSE(is_minor_bruteforce(oracle::complete_graph(5), octahedron));
  Graph k33;
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 3; b < 6; ++b) k33.add_edge(a, b);
  }
  EXPECT_FALSE(is_minor_bruteforce(k33, octahedron));
  EXPECT_TRUE(is_minor_bruteforce(oracle::complete_graph(5), oracle::complete_graph(6)));
  EXPECT_TRUE(is_minor_bruteforce(oracle::cycle_graph(3), oracle::cycle_graph(9)));
  EXPECT_FALSE(is_minor_bruteforce(oracle::cycle_graph(3), oracle::path_graph(9)));
}

TEST(Bruteforce, RejectsOversizedInputs) {
  EXPECT_MINORU_ERROR(is_minor_bruteforce(oracle::path_graph(kOracleMaxMinor + 1), oracle::path_graph(10)),
                      ErrorKind::kTooLarge);
  EXPECT_MINORU_ERROR(is_minor_bruteforce(oracle::path_graph(3), oracle::path_graph(kOracleMaxMajor + 1)),
                      ErrorKind::kTooLarge);
}

TEST(VerifyHamiltonian, Cases) {
  EXPECT_TRUE(verify_hamiltonian(oracle::cycle_graph(5), {0, 1, 2, 3, 4}));
  EXPECT_TRUE(verify_hamiltonian(oracle::cycle_graph(5), {4, 3, 2, 1, 0}));
  EXPECT_FALSE(verify_hamiltonian(oracle::cycle_graph(5), {0, 1, 2, 3}));
  EXPECT_FALSE(verify_hamiltonian(oracle::cycle_graph(5), {0, 2, 1, 3, 4}));
  EXPECT_FALSE(verify_hamiltonian(oracle::path_graph(5), {0, 1, 2, 3, 4}));
  EXPECT_FALSE(verify_hamiltonian(oracle::cycle_graph(5), {0, 1, 2, 3, 3}));
  Graph single;
  single.add_vertex(0);
  EXPECT_TRUE(verify_hamiltonian(single, {0}));
  Graph doubled = oracle::path_graph(2);
  EXPECT_FALSE(verify_hamiltonian(doubled, {0, 1}));
  doubled.add_edge(0, 1);
  EXPECT_TRUE(verify_hamiltonian(doubled, {0, 1}));
}

TEST(VerifyPMinor, IdentityOnItself) {
  for (const auto& p : {fixtures::k6_torus(), hexagon("a0 ~a0", {0, 3})}) {
    EXPECT_TRUE(verify_p_minor(p, p, Witness::identity(sew(p).graph)).empty());
  }
}

TEST(VerifyPMinor, SignatureMismatch) {
  const auto plain = hexagon("a1 a1", {0, 3});
  const auto barred = hexagon("a1 ~a1", {0, 3});
  EXPECT_TRUE(kinds_of(verify_p_minor(plain, barred, Witness::identity(sew(plain).graph)))
                  .count(ViolationKind::kSignatureMismatch));
}

TEST(VerifyPMinor, BorderMismatch) {
  const auto p = hexagon("a0 ~a0", {0, 3});
  const auto turned = hexagon("a0 ~a0", {3, 0});
  ASSERT_TRUE(turned.sides_recovered());
  EXPECT_TRUE(kinds_of(verify_p_minor(p, turned, Witness::identity(sew(p).graph)))
                  .count(ViolationKind::kBorderMismatch));
}
