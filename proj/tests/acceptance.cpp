// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "minoru/embed.hpp"
#include "minoru/fixtures.hpp"
#include "minoru/reduce.hpp"
#include "minoru/universal.hpp"
#include "minoru/verify.hpp"
#include "support/oracles.hpp"

using namespace minoru;

namespace {

// Every criterion is checked exactly; these are the pinned workload sizes.
constexpr std::int64_t kExactTolerance = 0;
constexpr std::size_t kSuiteSize = 200;
constexpr std::size_t kSuiteMaxInternal = 15;
constexpr std::size_t kSuiteMaxSide = 5;
constexpr std::size_t kTriangulationCount = 60;
constexpr std::size_t kSmallSewnLimit = 7;

const std::vector<std::string> kSuiteWords{"a0 ~a0", "a1 a1", "a1 a2 ~a1 ~a2", "a1 a2 a1 a2", "a1 a1 a2 a2"};

struct Report {
  bool pass = true;
  std::size_t cases = 0;
  std::ostringstream first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) first_failure << what;
    pass = pass && ok;
  }
};

bool exact(std::int64_t measured, std::int64_t expected) {
  return std::abs(measured - expected) <= kExactTolerance;
}

struct Instance {
  std::string word;
  std::uint64_t seed = 0;
  PolygonalEmbedding input;
};

std::vector<Instance> build_suite() {
  const std::uint64_t base = fixtures::seed_from_env();
  std::mt19937_64 rng(base);
  std::vector<Instance> suite;
  for (std::size_t i = 0; i < kSuiteSize; ++i) {
    const std::string& word = kSuiteWords[i % kSuiteWords.size()];
    const std::size_t side = 1 + rng() % kSuiteMaxSide;
    const std::size_t internal = rng() % (kSuiteMaxInternal + 1);
    const std::uint64_t seed = base + 1000 + i;
    suite.push_back({word, seed, fixtures::random_triangulated(seed, {Signature::parse(word), side, internal})});
  }
  return suite;
}

std::string tag(const Instance& inst) {
  return "[" + inst.word + " seed " + std::to_string(inst.seed) + "]";
}

std::size_t side_vertex_total(const PolygonalEmbedding& p) {
  std::size_t total = 0;
  for (const auto& side : p.sides()) total += side.size();
  return total;
}

// Restricts `major` to the branch sets of `w`, then contracts each branch set
// into at most two connected pieces: a spanning-tree leaf and the rest. The
// result is a minor of `major` together with the induced model.
struct Restriction {
  Graph graph;
  Witness witness;
};

Restriction restrict_and_shrink(const Graph& major, const Witness& w) {
  Restriction out;
  std::map<VertexId, VertexId> piece;
  VertexId next = 0;
  for (const auto& [h, set] : w.branch_sets) {
    const VertexId root = *set.begin();
    std::map<VertexId, VertexId> parent{{root, root}};
    std::vector<VertexId> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (VertexId y : major.neighbors(order[i])) {
        if (set.count(y) && parent.emplace(y, order[i]).second) order.push_back(y);
      }
    }
    const VertexId main_piece = next++;
    out.graph.add_vertex(main_piece);
    out.witness.branch_sets[h].insert(main_piece);
    for (VertexId x : set) piece[x] = main_piece;
    if (set.size() >= 2) {
      // The last vertex reached is a leaf of the search tree.
      const VertexId leaf_piece = next++;
      out.graph.add_vertex(leaf_piece);
      out.witness.branch_sets[h].insert(leaf_piece);
      piece[order.back()] = leaf_piece;
    }
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : major.edges()) {
    const auto a = piece.find(e.u);
    const auto b = piece.find(e.v);
    if (a == piece.end() || b == piece.end() || a->second == b->second) continue;
    const auto key = std::minmax(a->second, b->second);
    if (seen.insert(key).second) out.graph.add_edge(key.first, key.second);
  }
  return out;
}

Report universal_counts_criterion() {
  Report r;
  for (const char* word : {"a0 ~a0", "a1 a1", "a1 a2 ~a1 ~a2", "a1 a2 a1 a2"}) {
    const Signature sigma = Signature::parse(word);
    const auto s = static_cast<std::int64_t>(sigma.size());
    for (std::int64_t m = 1; m <= 6; ++m) {
      const auto u = build_universal(sigma, m);
      const auto size = u.base.size();
      const std::string at = std::string(word) + " m=" + std::to_string(m);
      r.check(exact(static_cast<std::int64_t>(size.m), m), at + ": side length " + std::to_string(size.m));
      r.check(exact(static_cast<std::int64_t>(size.n), s * m * (s * m - 1) / 2),
              at + ": internal " + std::to_string(size.n));
      const auto sewn = static_cast<std::int64_t>(sew(u.base).graph.vertex_count());
      const std::int64_t bound = (s * s * m * m + s) / 2;
      r.check(sewn <= bound, at + ": sewn " + std::to_string(sewn) + " > bound " + std::to_string(bound));
    }
  }
  const auto fig = build_universal(Signature::parse("a1 a2 a1 a2"), 2).base.size();
  r.check(fig == EmbeddingSize{2, 28}, "a1 a2 a1 a2 m=2 is not (2,28)");
  return r;
}

Report genus_criterion() {
  Report r;
  const std::vector<std::pair<std::string, int>> expected{
      {"a0 ~a0", 0}, {"a1 a1", 1}, {"a1 a2 ~a1 ~a2", 2}, {"a1 a2 a1 a2", 2}};
  for (const auto& [word, genus] : expected) {
    for (std::int64_t m = 1; m <= 4; ++m) {
      const int measured = sewn_genus(build_universal(Signature::parse(word), m).base);
      r.check(exact(measured, genus), word + " m=" + std::to_string(m) + ": genus " + std::to_string(measured) +
                                          ", expected " + std::to_string(genus));
    }
  }
  return r;
}

struct Reduced {
  const Instance* instance = nullptr;
  OuterplanarResult reduction;
};

Report blowup_split_criterion(const std::vector<Reduced>& suite) {
  Report r;
  for (const auto& item : suite) {
    const auto& red = item.reduction;
    const auto& tri = red.triangulated;
    const std::size_t n = tri.size().n;
    std::size_t k = 0;
    for (const auto& t : red.forest.trees) k += t.edges.empty() ? 0 : 1;
    const std::string at = tag(*item.instance);
    r.check(exact(static_cast<std::int64_t>(red.blown.embedding.size().n), static_cast<std::int64_t>(2 * n - k)),
            at + " blow-up internal count");
    const SplitResult split = split_anchors(red.blown.embedding.graph(), red.blown.record);
    const std::size_t outer = tri.graph().outerface().size();
    r.check(exact(static_cast<std::int64_t>(split.graph.vertex_count()), static_cast<std::int64_t>(outer + 2 * n)),
            at + " split vertex count");
    r.check(verify_hamiltonian(split.graph.skeleton(), split.hamiltonian_cycle), at + " Hamiltonian cycle");
  }
  return r;
}

Report hamiltonian_criterion() {
  Report r;
  const std::uint64_t base = fixtures::seed_from_env() + 5000;
  for (std::size_t i = 0; i < kTriangulationCount; ++i) {
    const std::size_t n = 4 + i % 9;
    const PlaneGraph g = fixtures::random_planar_triangulation(base + i, n);
    const HamiltonianMajor h = hamiltonian_major(g);
    const std::string at = "n=" + std::to_string(n) + " seed " + std::to_string(base + i);
    r.check(euler_characteristic_check(h.graph) == 0, at + " not planar");
    r.check(verify_hamiltonian(h.graph.skeleton(), h.cycle), at + " cycle not Hamiltonian");
    r.check(h.graph.vertex_count() <= 2 * n - 4, at + " has " + std::to_string(h.graph.vertex_count()) + " vertices");
    r.check(edge_sets_equal(replay(h.graph.skeleton(), h.steps), g.skeleton()), at + " replay differs");
  }
  return r;
}

Report outerplanar_criterion(const std::vector<Reduced>& suite) {
  Report r;
  for (const auto& item : suite) {
    const auto& red = item.reduction;
    const auto start = red.triangulated.size();
    const auto end = red.result.size();
    const std::string at = tag(*item.instance);
    r.check(end.n == 0, at + " internal vertices remain");
    r.check(end.m <= start.m + 2 * start.n, at + " side longer than m+2n");
    r.check(exact(static_cast<std::int64_t>(side_vertex_total(red.result)),
                  static_cast<std::int64_t>(side_vertex_total(red.triangulated) + 4 * start.n)),
            at + " side vertices did not grow by 4n");
    for (const PolygonalEmbedding* stage : {&item.instance->input, &red.guarded, &red.triangulated,
                                            &red.blown.embedding, &red.split.embedding, &red.result}) {
      r.check(validate(*stage).empty(), at + " a stage fails validation");
    }
    r.check(edge_sets_equal(sew(red.split.embedding).graph, sew(red.result).graph), at + " sewings differ");
  }
  return r;
}

struct Embedded {
  const Instance* instance = nullptr;
  EmbedResult result;
};

Report theorem_criterion(const std::vector<Embedded>& suite) {
  Report r;
  for (const auto& item : suite) {
    r.check(verify_p_minor(item.instance->input, item.result.universal.base, item.result.witness).empty(),
            tag(*item.instance) + " witness rejected");
  }
  const auto k6 = fixtures::k6_torus();
  const EmbedResult embedded = universal_embed(k6);
  r.check(verify_p_minor(k6, embedded.universal.base, embedded.witness).empty(), "K6 fixture witness rejected");

  // K6 in the sewn fixture by exhaustive search, then carried into the grid.
  const Graph k6_graph = oracle::complete_graph(6);
  const auto in_fixture = find_minor_bruteforce(k6_graph, sew(k6).graph);
  r.check(in_fixture.has_value(), "K6 not found in the sewn fixture");
  if (in_fixture) {
    const Graph grid = sew(embedded.universal.base).graph;
    const Witness carried = compose_witness(*in_fixture, embedded.witness);
    r.check(verify_witness(k6_graph, grid, carried).empty(), "carried K6 model invalid");
    const Restriction small = restrict_and_shrink(grid, carried);
    r.check(small.graph.vertex_count() <= kOracleMaxMajor, "K6 restriction too large");
    r.check(is_minor_bruteforce(k6_graph, small.graph), "K6 not a minor of the restriction");
  }
  return r;
}

Report oracle_agreement_criterion(const std::vector<Embedded>& suite) {
  Report r;
  std::vector<PolygonalEmbedding> extra;
  const std::uint64_t base = fixtures::seed_from_env() + 9000;
  for (std::uint64_t s = 0; s < 6; ++s) extra.push_back(fixtures::sphere_outerplanar(base + s, 2 + s % 2));
  for (std::uint64_t s = 0; s < 12; ++s) {
    const auto& word = kSuiteWords[s % kSuiteWords.size()];
    extra.push_back(fixtures::random_triangulated(base + 100 + s, {Signature::parse(word), 1, s % 3}));
  }
  std::vector<std::pair<PolygonalEmbedding, Witness>> cases;
  std::vector<PolygonalEmbedding> universals;
  for (const auto& item : suite) {
    if (sew(item.instance->input).graph.vertex_count() <= kSmallSewnLimit) {
      cases.emplace_back(item.instance->input, item.result.witness);
      universals.push_back(item.result.universal.base);
    }
  }
  for (const auto& p : extra) {
    if (sew(p).graph.vertex_count() > kSmallSewnLimit) continue;
    EmbedResult e = universal_embed(p);
    cases.emplace_back(p, e.witness);
    universals.push_back(e.universal.base);
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Graph minor = sew(cases[i].first).graph;
    const Restriction small = restrict_and_shrink(sew(universals[i]).graph, cases[i].second);
    const std::string at = cases[i].first.signature().to_string() + " case " + std::to_string(i);
    r.check(small.graph.vertex_count() <= kOracleMaxMajor, at + " restriction too large");
    r.check(verify_witness(minor, small.graph, small.witness).empty(), at + " shrunk model invalid");
    r.check(is_minor_bruteforce(minor, small.graph), at + " exhaustive search disagrees");
  }
  r.check(cases.size() >= 10, "fewer than ten small cases");
  return r;
}

Report headline_criterion(const std::vector<Embedded>& suite) {
  Report r;
  for (const auto& item : suite) {
    const Signature& sigma = item.instance->input.signature();
    if (sigma.is_sphere() || !sigma.is_canonical()) continue;
    if (sewn_genus(item.instance->input) != static_cast<int>(sigma.size()) / 2) continue;
    const auto g = static_cast<std::int64_t>(sigma.size()) / 2;
    const auto size = item.result.reduction.triangulated.size();
    const auto param = static_cast<std::int64_t>(size.m + 2 * size.n);
    const auto measured = static_cast<std::int64_t>(sew(item.result.universal.base).graph.vertex_count());
    const std::int64_t bound = (2 * g) * (2 * g) * param * param / 2 + g;
    r.check(measured <= bound, tag(*item.instance) + " sewn " + std::to_string(measured) + " > " +
                                   std::to_string(bound));
  }
  r.check(r.cases >= 50, "fewer than fifty canonical instances");
  return r;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  bool all = true;
  const auto emit = [&](int number, const std::string& name, const Report& r) {
    std::cout << "criterion " << number << " " << name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.cases
              << " checks)";
    if (!r.pass) std::cout << " first failure: " << r.first_failure.str();
    std::cout << std::endl;
    all = all && r.pass;
  };

  emit(1, "universal-counts", universal_counts_criterion());
  emit(2, "genus-preservation", genus_criterion());

  const std::vector<Instance> suite = build_suite();
  std::vector<Reduced> reduced;
  reduced.reserve(suite.size());
  for (const auto& inst : suite) reduced.push_back({&inst, outerplanarize(inst.input)});
  emit(3, "blow-up-and-split-counts", blowup_split_criterion(reduced));
  emit(4, "hamiltonian-major", hamiltonian_criterion());
  emit(5, "outerplanarize", outerplanar_criterion(reduced));

  std::vector<Embedded> embedded;
  embedded.reserve(reduced.size());
  for (auto& item : reduced) embedded.push_back({item.instance, universal_embed(item.instance->input, item.reduction)});
  emit(6, "universal-embedding", theorem_criterion(embedded));
  emit(7, "oracle-agreement", oracle_agreement_criterion(embedded));
  emit(8, "headline-bound", headline_criterion(embedded));

  const double seconds = std::chrono::duration<double>(Clock::now() - started).count();
  std::cout << "elapsed " << seconds << " s, seed " << fixtures::seed_from_env() << std::endl;
  return all ? 0 : 1;
}
