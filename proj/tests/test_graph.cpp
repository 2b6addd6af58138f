#include <gtest/gtest.h>

#include "minoru/fixtures.hpp"
#include "minoru/graph.hpp"
#include "support/oracles.hpp"

using namespace minoru;

namespace {

PlaneGraph unit_square() {
  return plane_graph_from_drawing({{0, {0, 0}}, {1, {1, 0}}, {2, {1, 1}}, {3, {0, 1}}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

}  // namespace

TEST(DartToken, RoundTrips) {
  EXPECT_EQ(to_token(Dart{12, 1}), "e12:1");
  EXPECT_EQ(dart_from_token("e12:1"), (Dart{12, 1}));
  EXPECT_EQ(dart_from_token("e0:0"), (Dart{0, 0}));
  for (const char* bad : {"12:1", "e12:2", "e:1", "ex:0", "e1:01"}) {
    try {
      dart_from_token(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse) << bad;
    }
  }
}

TEST(Graph, MergeMovesEdgeEnds) {
  Graph g = oracle::path_graph(4);
  g.merge_vertices(1, 2);
  EXPECT_FALSE(g.has_vertex(2));
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_EQ(g.edge_count(), 3u);  // 0-1, a loop at 1, 1-3
}

TEST(Graph, EdgeSetsCompareEndpointsNotIds) {
  Graph a;
  a.add_edge(Edge{7, 0, 1});
  a.add_edge(Edge{3, 2, 1});
  Graph b;
  b.add_edge(Edge{0, 1, 2});
  b.add_edge(Edge{1, 1, 0});
  EXPECT_TRUE(edge_sets_equal(a, b));
  b.add_edge(Edge{2, 0, 1});
  EXPECT_FALSE(edge_sets_equal(a, b));
}

TEST(PlaneGraph, OctahedronFacesMatchIndependentTracer) {
  const PlaneGraph g = fixtures::octahedron();
  EXPECT_EQ(trace_faces(g).faces.size(), 8u);
  EXPECT_EQ(oracle::count_faces(g), 8u);
  EXPECT_EQ(euler_characteristic_check(g), 0);
  EXPECT_EQ(g.outerface().size(), 3u);
}

TEST(PlaneGraph, RandomTriangulationsArePlanar) {
  const auto seed = fixtures::seed_from_env();
  for (std::size_t n = 3; n <= 14; ++n) {
    const PlaneGraph g = fixtures::random_planar_triangulation(seed + n, n);
    ASSERT_EQ(g.vertex_count(), n);
    EXPECT_EQ(g.edge_count(), 3 * n - 6);
    EXPECT_EQ(trace_faces(g).faces.size(), oracle::count_faces(g));
    EXPECT_EQ(euler_characteristic_check(g), 0) << "n=" << n;
    for (const auto& face : trace_faces(g).faces) EXPECT_EQ(face.size(), 3u);
  }
}

TEST(PlaneGraph, K5BestRotationIsToroidal) {
  EXPECT_EQ(oracle::k5_minimum_genus(), 1);
}

TEST(PlaneGraph, AddEdgeInFaceSplitsTheFace) {
  PlaneGraph g = unit_square();
  ASSERT_EQ(trace_faces(g).faces.size(), 2u);
  std::set<Dart> outer(g.outerface().begin(), g.outerface().end());
  std::vector<Dart> inner;
  for (const auto& f : trace_faces(g).faces) {
    if (!outer.count(f.front())) inner = f;
  }
  ASSERT_EQ(inner.size(), 4u);
  const EdgeId e = g.add_edge_in_face(inner[0], inner[2]);
  EXPECT_TRUE(g.has_edge(e));
  EXPECT_EQ(trace_faces(g).faces.size(), 3u);
  EXPECT_EQ(euler_characteristic_check(g), 0);
  EXPECT_EQ(g.face_walk(inner[0]).size(), 3u);
}

TEST(PlaneGraph, SubdivideEitherHalfKeepsTheEmbedding) {
  for (bool fresh_at_u : {false, true}) {
    PlaneGraph g = unit_square();
    const Edge e = g.edges().front();
    const auto [s, fresh] = fresh_at_u ? g.subdivide(e.id, e.u) : g.subdivide(e.id);
    EXPECT_EQ(g.vertex_count(), 5u);
    EXPECT_EQ(g.degree(s), 2u);
    EXPECT_EQ(g.outerface().size(), 5u);
    EXPECT_EQ(g.face_walk(g.outerface().front()).size(), 5u);
    EXPECT_EQ(euler_characteristic_check(g), 0);
    const Edge f = g.edge(fresh);
    EXPECT_TRUE(f.u == s || f.v == s);
    EXPECT_TRUE(f.other(s) == (fresh_at_u ? e.u : e.v));
  }
}

TEST(PlaneGraph, SubdivideRejectsForeignEndpoint) {
  PlaneGraph g = unit_square();
  const Edge e = g.edges().front();
  VertexId stranger = 0;
  while (stranger == e.u || stranger == e.v) ++stranger;
  EXPECT_THROW(g.subdivide(e.id, stranger), Error);
}

TEST(PlaneGraph, EulerCheckRejectsDisconnected) {
  PlaneGraph g = unit_square();
  g.add_vertex(99);
  try {
    euler_characteristic_check(g);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDisconnected);
  }
}
