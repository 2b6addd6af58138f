#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minoru/error.hpp"

namespace minoru {

using VertexId = std::int64_t;
using EdgeId = std::int64_t;

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  VertexId endpoint(int end) const { return end == 0 ? u : v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// An edge-end. As a directed half-edge it leaves endpoint(end) of its edge
// and points at the opposite endpoint.
struct Dart {
  EdgeId edge = 0;
  int end = 0;

  Dart reversed() const { return Dart{edge, 1 - end}; }
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

std::string to_token(Dart d);
Dart dart_from_token(const std::string& token);

// Abstract multigraph without an embedding. Sewn graphs and minor models
// live here.
class Graph {
 public:
  Graph() = default;

  void add_vertex(VertexId v);
  void add_edge(const Edge& e);
  EdgeId add_edge(VertexId u, VertexId v);
  void remove_edge(EdgeId e);
  void remove_vertex(VertexId v);
  // Merges `removed` into `keep`; every edge end at `removed` moves to `keep`.
  void merge_vertices(VertexId keep, VertexId removed);

  bool has_vertex(VertexId v) const { return adjacency_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  const Edge& edge(EdgeId e) const;
  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  // Incident edge ids (a loop appears twice).
  const std::vector<EdgeId>& incident(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;

  Graph induced(const std::vector<VertexId>& keep) const;

 private:
  std::map<VertexId, std::vector<EdgeId>> adjacency_;
  std::map<EdgeId, Edge> edges_;
  EdgeId next_edge_ = 0;
};

bool is_connected(const Graph& g);
// Multiset comparison of vertex ids and unordered endpoint pairs.
bool edge_sets_equal(const Graph& a, const Graph& b);

struct FaceSet {
  std::vector<std::vector<Dart>> faces;
};

// A connected graph with a rotation system (clockwise order of edge-ends at
// each vertex) and a designated outer face walk. Face tracing follows the
// rule next(d) = clockwise successor of reversed(d), which keeps the traced
// face on the left; the outer face is therefore walked clockwise with the
// interior on its right.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  // --- queries
  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_vertex(VertexId v) const { return rotation_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  const Edge& edge(EdgeId e) const;
  const std::vector<Dart>& rotation(VertexId v) const;
  std::size_t degree(VertexId v) const { return rotation(v).size(); }
  VertexId tail(Dart d) const { return edge(d.edge).endpoint(d.end); }
  VertexId head(Dart d) const { return edge(d.edge).endpoint(1 - d.end); }
  Dart cw_next(Dart d) const;
  Dart cw_prev(Dart d) const;
  Dart face_next(Dart d) const { return cw_next(d.reversed()); }
  std::vector<Dart> face_walk(Dart start) const;
  const std::vector<Dart>& outerface() const { return outerface_; }
  std::vector<VertexId> outerface_vertices() const;
  // First dart leaving `from` towards `to`, if any.
  std::optional<Dart> dart_between(VertexId from, VertexId to) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  VertexId next_vertex_id() const { return next_vertex_; }
  EdgeId next_edge_id() const { return next_edge_; }

  Graph skeleton() const;

  // --- construction (used by builders; results are handed out as values)
  VertexId add_vertex();
  void add_vertex(VertexId id);
  // Appends both ends at the end of the endpoints' rotations.
  EdgeId add_edge(VertexId u, VertexId v);
  EdgeId add_edge_with_id(EdgeId id, VertexId u, VertexId v);
  // Adds u-v so that the new end at u sits immediately before `before_u`
  // (a dart leaving u) and the new end at v immediately before `before_v`.
  // When both darts lie on one face walk, that face is split in two.
  EdgeId add_edge_in_face(Dart before_u, Dart before_v);
  void remove_edge(EdgeId e);
  // Moves the end `d` of its edge to vertex `to`, placing it right after
  // `after` in the rotation of `to` (or at the end when absent).
  void move_end(Dart d, VertexId to, std::optional<Dart> after);
  void insert_after(Dart ref, Dart d);
  void insert_before(Dart ref, Dart d);
  void set_rotation(VertexId v, std::vector<Dart> order);
  // Replaces e=(u,v) by u-s-v. Edge e becomes u-s, the new edge is s-v.
  std::pair<VertexId, EdgeId> subdivide(EdgeId e);
  // Same, but the new edge is the half at `fresh_end`.
  std::pair<VertexId, EdgeId> subdivide(EdgeId e, VertexId fresh_end);
  void set_outerface(std::vector<Dart> walk) { outerface_ = std::move(walk); }
  void retrace_outerface(Dart on_outer) { outerface_ = face_walk(on_outer); }
  void reserve_ids(VertexId next_vertex, EdgeId next_edge);

 private:
  std::map<VertexId, std::vector<Dart>> rotation_;
  std::map<EdgeId, Edge> edges_;
  std::vector<Dart> outerface_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;

  std::size_t position(Dart d) const;
};

// Orbits of darts under face_next, each rotated to start at its smallest
// dart, sorted by that dart.
FaceSet trace_faces(const PlaneGraph& g);
bool is_connected(const PlaneGraph& g);
// 2 - V + E - F; throws kDisconnected.
int euler_characteristic_check(const PlaneGraph& g);
bool edge_sets_equal(const PlaneGraph& a, const PlaneGraph& b);

// Builds a plane graph from straight-line coordinates: rotations sort edges
// clockwise by angle, and the outer face is traced from the given dart.
PlaneGraph plane_graph_from_drawing(const std::map<VertexId, std::pair<double, double>>& coords,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges);

}  // namespace minoru
