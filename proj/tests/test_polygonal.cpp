#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "minoru/fixtures.hpp"
#include "minoru/polygonal.hpp"
#include "support/oracles.hpp"

using namespace minoru;

namespace {

// A ring 0..n-1 drawn on a circle plus optional chords. The corners are
// listed in the order they appear along the outer walk.
PolygonalEmbedding ring_polygon(std::size_t n, std::set<VertexId> corners, const std::string& word,
                                std::vector<std::pair<VertexId, VertexId>> chords = {}) {
  std::map<VertexId, std::pair<double, double>> coords;
  std::vector<std::pair<VertexId, VertexId>> edges = std::move(chords);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    coords[static_cast<VertexId>(i)] = {std::cos(a), std::sin(a)};
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  PlaneGraph g = plane_graph_from_drawing(coords, edges);
  std::vector<VertexId> border;
  for (const auto& d : g.outerface()) {
    if (corners.count(g.tail(d))) border.push_back(g.tail(d));
  }
  return PolygonalEmbedding(std::move(g), std::move(border), Signature::parse(word));
}

std::set<EmbeddingViolationKind> kinds_of(const PolygonalEmbedding& p) {
  std::set<EmbeddingViolationKind> out;
  for (const auto& v : validate(p)) out.insert(v.kind);
  return out;
}

std::vector<PolygonalEmbedding> sample_embeddings() {
  const auto seed = fixtures::seed_from_env();
  std::vector<PolygonalEmbedding> out{fixtures::k6_torus(), fixtures::hanging_tree().embedding,
                                      fixtures::sphere_outerplanar(seed, 4)};
  std::uint64_t s = seed;
  for (const char* word : {"a0 ~a0", "a1 a1", "a1 a2 ~a1 ~a2", "a1 a2 a1 a2", "a1 a1 a2 a2", "a b c ~b ~a ~c"}) {
    for (std::size_t internal : {0, 3, 7}) {
      out.push_back(fixtures::random_triangulated(++s, {Signature::parse(word), 3, internal}));
    }
  }
  return out;
}

}  // namespace

TEST(Signature, ParsesBarredTokens) {
  const Signature s = Signature::parse("a1 ~a2 ~a1 a2");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[1], (Symbol{"a2", true}));
  EXPECT_EQ(s.to_string(), "a1 ~a2 ~a1 a2");
  EXPECT_EQ(s.twin_side(0), 2u);
  EXPECT_EQ(s.twin_side(3), 1u);
  EXPECT_TRUE(s.reversed_pair(0));
  EXPECT_FALSE(Signature::parse("a1 a1").reversed_pair(1));
  EXPECT_FALSE(Signature::parse("~a ~a").reversed_pair(0));
}

TEST(Signature, ReportsUnpairedLetters) {
  const Signature s = Signature::parse("a b a c c c");
  EXPECT_EQ(s.unpaired_letters(), (std::vector<std::string>{"b", "c"}));
  EXPECT_FALSE(s.well_paired());
  EXPECT_THROW(s.twin_side(1), Error);
}

TEST(Signature, CanonicalForms) {
  EXPECT_TRUE(Signature::parse("a0 ~a0").is_sphere());
  EXPECT_FALSE(Signature::parse("~a0 a0").is_sphere());
  EXPECT_TRUE(Signature::parse("a1 a2 ~a1 ~a2 a3 a4 ~a3 ~a4").is_canonical_orientable());
  EXPECT_FALSE(Signature::parse("a1 a2 ~a2 ~a1").is_canonical_orientable());
  EXPECT_TRUE(Signature::parse("a1 a1 a2 a2").is_canonical_nonorientable());
  EXPECT_FALSE(Signature::parse("a1 a2 a1 a2").is_canonical());
  EXPECT_FALSE(Signature::parse("a1 a1 a1 a1").is_canonical());
}

TEST(PolygonalEmbedding, RecoversSidesFromOuterWalk) {
  const auto p = ring_polygon(6, {0, 3}, "a ~a");
  ASSERT_TRUE(p.sides_recovered());
  EXPECT_EQ(p.sides()[0].size(), 2u);
  EXPECT_EQ(p.sides()[1].size(), 2u);
  EXPECT_EQ(p.side_path(0).front(), p.border()[0]);
  EXPECT_EQ(p.side_path(0).back(), p.border()[1]);
  EXPECT_EQ(p.side_edges(1).size(), 3u);
  EXPECT_EQ(p.size(), (EmbeddingSize{2, 0}));
  EXPECT_TRUE(validate(p).empty());
}

TEST(Validate, FlagsCornerOfDegreeThree) {
  EXPECT_EQ(kinds_of(ring_polygon(4, {0, 2}, "a ~a", {{0, 2}})),
            (std::set<EmbeddingViolationKind>{EmbeddingViolationKind::kCornerDegree}));
}

TEST(Validate, FlagsTwinSidesOfDifferentLength) {
  EXPECT_EQ(kinds_of(ring_polygon(5, {0, 2}, "a ~a")),
            (std::set<EmbeddingViolationKind>{EmbeddingViolationKind::kSideLengthMismatch}));
}

TEST(Validate, FlagsEmptySide) {
  EXPECT_TRUE(kinds_of(ring_polygon(4, {0, 1}, "a ~a")).count(EmbeddingViolationKind::kEmptySide));
}

TEST(Validate, FlagsSignatureProblems) {
  EXPECT_TRUE(kinds_of(ring_polygon(6, {0, 3}, "a ~a b")).count(EmbeddingViolationKind::kSignatureLength));
  EXPECT_TRUE(kinds_of(ring_polygon(6, {0, 3}, "a b")).count(EmbeddingViolationKind::kLetterCount));
}

TEST(Validate, FlagsUnrecoverableBorder) {
  auto good = ring_polygon(6, {0, 3}, "a ~a");
  const PolygonalEmbedding bad(good.graph(), {good.border()[0], 99}, good.signature());
  EXPECT_FALSE(bad.sides_recovered());
  EXPECT_TRUE(kinds_of(bad).count(EmbeddingViolationKind::kBorderNotRecoverable));
}

TEST(Validate, FixturesAreClean) {
  for (const auto& p : sample_embeddings()) {
    const auto violations = validate(p);
    EXPECT_TRUE(violations.empty()) << p.signature().to_string() << ": " << violations.front().detail;
  }
}

TEST(Twins, VertexTwinIsAnInvolution) {
  for (const auto& p : sample_embeddings()) {
    for (std::size_t i = 0; i < p.signature().size(); ++i) {
      for (VertexId v : p.sides()[i]) {
        const VertexId t = twin_vertex(p, v);
        EXPECT_EQ(p.side_position(t).first, p.signature().twin_side(i));
        EXPECT_EQ(twin_vertex(p, t), v);
      }
      for (EdgeId e : p.side_edges(i)) EXPECT_EQ(twin_edge(p, twin_edge(p, e)), e);
    }
  }
}

TEST(Sew, MatchesHandGluing) {
  for (const auto& p : sample_embeddings()) {
    const SewnGraph sewn = sew(p);
    const auto expected = oracle::sew_by_hand(p);
    EXPECT_EQ(sewn.graph.vertex_count(), expected.vertices) << p.signature().to_string();
    EXPECT_EQ(sewn.graph.edge_count(), expected.edges) << p.signature().to_string();
    EXPECT_EQ(sewn.faces.size(), expected.faces) << p.signature().to_string();
    EXPECT_EQ(sewn_genus(p), expected.euler_genus()) << p.signature().to_string();
  }
}

TEST(Sew, ProjectionClassesMatchHandGluing) {
  for (const auto& p : sample_embeddings()) {
    const SewnGraph sewn = sew(p);
    std::map<VertexId, std::vector<VertexId>> classes;
    for (const auto& [v, image] : sewn.projection) classes[image].push_back(v);
    std::vector<std::vector<VertexId>> got;
    for (auto& [image, members] : classes) {
      EXPECT_EQ(image, members.front());
      got.push_back(members);
    }
    EXPECT_EQ(got, oracle::glued_classes(p)) << p.signature().to_string();
  }
}

TEST(Sew, GenusFollowsSignature) {
  const auto seed = fixtures::seed_from_env();
  const std::map<std::string, int> genus{
      {"a0 ~a0", 0}, {"a1 a1", 1}, {"a1 a2 ~a1 ~a2", 2}, {"a1 a1 a2 a2", 2}, {"a b c ~b ~a ~c", 2}};
  for (const auto& [word, expected] : genus) {
    for (std::size_t internal : {0, 5}) {
      const auto p = fixtures::random_triangulated(seed + internal, {Signature::parse(word), 2, internal});
      EXPECT_EQ(sewn_genus(p), expected) << word;
      EXPECT_EQ(sewn_genus(p), oracle::sew_by_hand(p).euler_genus()) << word;
    }
  }
}

TEST(Sew, K6LandsOnTheTorus) {
  const auto p = fixtures::k6_torus();
  EXPECT_EQ(p.internal_vertices().size(), 6u);
  EXPECT_EQ(sewn_genus(p), 2);
}

TEST(SubdivideTwinEdge, AddsOneSewnVertex) {
  for (const auto& p : sample_embeddings()) {
    const auto before = oracle::sew_by_hand(p);
    for (std::size_t side = 0; side < p.signature().size(); ++side) {
      const EdgeId e = p.side_edges(side).front();
      const TwinSubdivision t = subdivide_twin_edge(p, e);
      EXPECT_TRUE(validate(t.embedding).empty());
      EXPECT_EQ(twin_vertex(t.embedding, t.on_edge), t.on_twin);
      EXPECT_EQ(t.embedding.sides()[side].size(), p.sides()[side].size() + 1);
      const auto after = oracle::sew_by_hand(t.embedding);
      EXPECT_EQ(after.vertices, before.vertices + 1);
      EXPECT_EQ(after.euler_genus(), before.euler_genus());
      EXPECT_EQ(sew(t.embedding).graph.vertex_count(), before.vertices + 1);
      EXPECT_TRUE(edge_sets_equal(replay(t.embedding.graph().skeleton(), t.steps), p.graph().skeleton()));
    }
  }
}

TEST(SubdivideTwinEdge, RejectsNonSideEdge) {
  const auto p = fixtures::k6_torus();
  const auto internal = p.internal_vertices();
  const EdgeId inner = p.graph().rotation(internal.front()).front().edge;
  ASSERT_FALSE(p.side_edge_position(inner).has_value());
  EXPECT_THROW(subdivide_twin_edge(p, inner), Error);
}
