#include "minoru/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace minoru {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedRotation: return "MalformedRotation";
    case ErrorKind::kDisconnected: return "Disconnected";
    case ErrorKind::kSignatureMismatch: return "SignatureMismatch";
    case ErrorKind::kBadSignature: return "BadSignature";
    case ErrorKind::kBadM: return "BadM";
    case ErrorKind::kNotASideEdge: return "NotASideEdge";
    case ErrorKind::kInvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::kCannotAvoidCorner: return "CannotAvoidCorner";
    case ErrorKind::kForestMismatch: return "ForestMismatch";
    case ErrorKind::kMissingAnchorFrame: return "MissingAnchorFrame";
    case ErrorKind::kSeparatingCircuit: return "SeparatingCircuit";
    case ErrorKind::kTooSmallCircuit: return "TooSmallCircuit";
    case ErrorKind::kAnchorIsCorner: return "AnchorIsCorner";
    case ErrorKind::kEdgeAnchorViolation: return "EdgeAnchorViolation";
    case ErrorKind::kTwinIsEdgeAnchor: return "TwinIsEdgeAnchor";
    case ErrorKind::kSideTooLong: return "SideTooLong";
    case ErrorKind::kNotOuterplanar: return "NotOuterplanar";
    case ErrorKind::kSpanViolation: return "SpanViolation";
    case ErrorKind::kDomainMismatch: return "DomainMismatch";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kUnknownKind: return "UnknownKind";
  }
  return "Unknown";
}

std::string to_token(Dart d) {
  return "e" + std::to_string(d.edge) + ":" + std::to_string(d.end);
}

Dart dart_from_token(const std::string& token) {
  const auto colon = token.find(':');
  if (token.size() < 4 || token[0] != 'e' || colon == std::string::npos ||
      colon + 2 != token.size() || (token.back() != '0' && token.back() != '1')) {
    throw Error(ErrorKind::kParse, "bad edge-end token '" + token + "'");
  }
  try {
    std::size_t used = 0;
    const std::string digits = token.substr(1, colon - 1);
    const EdgeId id = std::stoll(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(digits);
    return Dart{id, token.back() - '0'};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::kParse, "bad edge-end token '" + token + "'");
  }
}

// ---------------------------------------------------------------- Graph

void Graph::add_vertex(VertexId v) { adjacency_.try_emplace(v); }

void Graph::add_edge(const Edge& e) {
  if (edges_.count(e.id)) throw Error(ErrorKind::kParse, "duplicate edge id " + std::to_string(e.id));
  add_vertex(e.u);
  add_vertex(e.v);
  edges_[e.id] = e;
  adjacency_[e.u].push_back(e.id);
  adjacency_[e.v].push_back(e.id);
  next_edge_ = std::max(next_edge_, e.id + 1);
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
  const EdgeId id = next_edge_;
  add_edge(Edge{id, u, v});
  return id;
}

void Graph::remove_edge(EdgeId id) {
  const Edge e = edge(id);
  auto drop = [&](VertexId x) {
    auto& inc = adjacency_[x];
    inc.erase(std::find(inc.begin(), inc.end(), id));
  };
  drop(e.u);
  drop(e.v);
  edges_.erase(id);
}

void Graph::remove_vertex(VertexId v) {
  const auto inc = incident(v);
  std::set<EdgeId> unique(inc.begin(), inc.end());
  for (EdgeId e : unique) remove_edge(e);
  adjacency_.erase(v);
}

void Graph::merge_vertices(VertexId keep, VertexId removed) {
  if (keep == removed) return;
  const auto inc = incident(removed);
  std::set<EdgeId> unique(inc.begin(), inc.end());
  for (EdgeId id : unique) {
    Edge e = edge(id);
    remove_edge(id);
    if (e.u == removed) e.u = keep;
    if (e.v == removed) e.v = keep;
    add_edge(e);
  }
  adjacency_.erase(removed);
}

const Edge& Graph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw Error(ErrorKind::kDomainMismatch, "no edge " + std::to_string(e));
  return it->second;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, inc] : adjacency_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [id, e] : edges_) out.push_back(e);
  return out;
}

const std::vector<EdgeId>& Graph::incident(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw Error(ErrorKind::kDomainMismatch, "no vertex " + std::to_string(v));
  return it->second;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::set<VertexId> out;
  for (EdgeId e : incident(v)) out.insert(edge(e).other(v));
  return {out.begin(), out.end()};
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  for (EdgeId e : incident(a)) {
    if (edge(e).other(a) == b) return true;
  }
  return false;
}

Graph Graph::induced(const std::vector<VertexId>& keep) const {
  std::set<VertexId> kept(keep.begin(), keep.end());
  Graph out;
  for (VertexId v : kept) out.add_vertex(v);
  for (const auto& [id, e] : edges_) {
    if (kept.count(e.u) && kept.count(e.v)) out.add_edge(e);
  }
  return out;
}

bool is_connected(const Graph& g) {
  const auto vs = g.vertices();
  if (vs.empty()) return true;
  std::set<VertexId> seen{vs.front()};
  std::queue<VertexId> queue;
  queue.push(vs.front());
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop();
    for (VertexId y : g.neighbors(x)) {
      if (seen.insert(y).second) queue.push(y);
    }
  }
  return seen.size() == vs.size();
}

namespace {

std::vector<std::pair<VertexId, VertexId>> endpoint_multiset(const std::vector<Edge>& edges) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

bool edge_sets_equal(const Graph& a, const Graph& b) {
  return a.vertices() == b.vertices() && endpoint_multiset(a.edges()) == endpoint_multiset(b.edges());
}

// ----------------------------------------------------------- PlaneGraph

std::vector<VertexId> PlaneGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(rotation_.size());
  for (const auto& [v, rot] : rotation_) out.push_back(v);
  return out;
}

std::vector<Edge> PlaneGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [id, e] : edges_) out.push_back(e);
  return out;
}

const Edge& PlaneGraph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw Error(ErrorKind::kMalformedRotation, "no edge " + std::to_string(e));
  return it->second;
}

const std::vector<Dart>& PlaneGraph::rotation(VertexId v) const {
  auto it = rotation_.find(v);
  if (it == rotation_.end()) throw Error(ErrorKind::kMalformedRotation, "no vertex " + std::to_string(v));
  return it->second;
}

std::size_t PlaneGraph::position(Dart d) const {
  const auto& rot = rotation(tail(d));
  auto it = std::find(rot.begin(), rot.end(), d);
  if (it == rot.end()) throw Error(ErrorKind::kMalformedRotation, "edge-end " + to_token(d) + " not housed");
  return static_cast<std::size_t>(it - rot.begin());
}

Dart PlaneGraph::cw_next(Dart d) const {
  const auto& rot = rotation(tail(d));
  return rot[(position(d) + 1) % rot.size()];
}

Dart PlaneGraph::cw_prev(Dart d) const {
  const auto& rot = rotation(tail(d));
  return rot[(position(d) + rot.size() - 1) % rot.size()];
}

std::vector<Dart> PlaneGraph::face_walk(Dart start) const {
  std::vector<Dart> walk;
  Dart d = start;
  do {
    walk.push_back(d);
    d = face_next(d);
    if (walk.size() > 2 * edges_.size() + 1) {
      throw Error(ErrorKind::kMalformedRotation, "face walk does not close");
    }
  } while (d != start);
  return walk;
}

std::vector<VertexId> PlaneGraph::outerface_vertices() const {
  std::vector<VertexId> out;
  out.reserve(outerface_.size());
  for (Dart d : outerface_) out.push_back(tail(d));
  return out;
}

std::optional<Dart> PlaneGraph::dart_between(VertexId from, VertexId to) const {
  for (Dart d : rotation(from)) {
    if (head(d) == to) return d;
  }
  return std::nullopt;
}

std::vector<VertexId> PlaneGraph::neighbors(VertexId v) const {
  std::set<VertexId> out;
  for (Dart d : rotation(v)) out.insert(head(d));
  return {out.begin(), out.end()};
}

Graph PlaneGraph::skeleton() const {
  Graph g;
  for (const auto& [v, rot] : rotation_) g.add_vertex(v);
  for (const auto& [id, e] : edges_) g.add_edge(e);
  return g;
}

VertexId PlaneGraph::add_vertex() {
  const VertexId id = next_vertex_;
  add_vertex(id);
  return id;
}

void PlaneGraph::add_vertex(VertexId id) {
  if (rotation_.count(id)) throw Error(ErrorKind::kMalformedRotation, "duplicate vertex " + std::to_string(id));
  rotation_[id];
  next_vertex_ = std::max(next_vertex_, id + 1);
}

EdgeId PlaneGraph::add_edge(VertexId u, VertexId v) { return add_edge_with_id(next_edge_, u, v); }

EdgeId PlaneGraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
  if (edges_.count(id)) throw Error(ErrorKind::kMalformedRotation, "duplicate edge " + std::to_string(id));
  if (!rotation_.count(u) || !rotation_.count(v)) {
    throw Error(ErrorKind::kMalformedRotation, "edge " + std::to_string(id) + " has unknown endpoint");
  }
  edges_[id] = Edge{id, u, v};
  rotation_[u].push_back(Dart{id, 0});
  rotation_[v].push_back(Dart{id, 1});
  next_edge_ = std::max(next_edge_, id + 1);
  return id;
}

EdgeId PlaneGraph::add_edge_in_face(Dart before_u, Dart before_v) {
  const VertexId u = tail(before_u);
  const VertexId v = tail(before_v);
  const EdgeId id = next_edge_++;
  edges_[id] = Edge{id, u, v};
  insert_before(before_u, Dart{id, 0});
  insert_before(before_v, Dart{id, 1});
  return id;
}

void PlaneGraph::remove_edge(EdgeId id) {
  const Edge e = edge(id);
  for (int end = 0; end < 2; ++end) {
    auto& rot = rotation_[e.endpoint(end)];
    rot.erase(std::find(rot.begin(), rot.end(), Dart{id, end}));
  }
  edges_.erase(id);
}

void PlaneGraph::move_end(Dart d, VertexId to, std::optional<Dart> after) {
  auto& from_rot = rotation_[tail(d)];
  from_rot.erase(std::find(from_rot.begin(), from_rot.end(), d));
  Edge& e = edges_.at(d.edge);
  (d.end == 0 ? e.u : e.v) = to;
  auto& to_rot = rotation_.at(to);
  if (after) {
    auto it = std::find(to_rot.begin(), to_rot.end(), *after);
    to_rot.insert(it + 1, d);
  } else {
    to_rot.push_back(d);
  }
}

void PlaneGraph::insert_after(Dart ref, Dart d) {
  auto& rot = rotation_[tail(ref)];
  rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(position(ref)) + 1, d);
}

void PlaneGraph::insert_before(Dart ref, Dart d) {
  auto& rot = rotation_[tail(ref)];
  rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(position(ref)), d);
}

void PlaneGraph::set_rotation(VertexId v, std::vector<Dart> order) { rotation_.at(v) = std::move(order); }

std::pair<VertexId, EdgeId> PlaneGraph::subdivide(EdgeId id) {
  const Edge e = edge(id);
  const VertexId s = add_vertex();
  const EdgeId fresh = next_edge_++;
  // End 1 of `id` moves to s; the old slot at v is taken over by the new edge.
  auto& vrot = rotation_[e.v];
  *std::find(vrot.begin(), vrot.end(), Dart{id, 1}) = Dart{fresh, 1};
  edges_[id].v = s;
  edges_[fresh] = Edge{fresh, s, e.v};
  rotation_[s] = {Dart{id, 1}, Dart{fresh, 0}};
  // Darts of the outer walk that used the old edge are split in place.
  std::vector<Dart> walk;
  walk.reserve(outerface_.size() + 1);
  for (Dart d : outerface_) {
    if (d == Dart{id, 0}) {
      walk.push_back(Dart{id, 0});
      walk.push_back(Dart{fresh, 0});
    } else if (d == Dart{id, 1}) {
      walk.push_back(Dart{fresh, 1});
      walk.push_back(Dart{id, 1});
    } else {
      walk.push_back(d);
    }
  }
  outerface_ = std::move(walk);
  return {s, fresh};
}

std::pair<VertexId, EdgeId> PlaneGraph::subdivide(EdgeId id, VertexId fresh_end) {
  const Edge e = edge(id);
  if (fresh_end == e.v) return subdivide(id);
  if (fresh_end != e.u) throw Error(ErrorKind::kInvalidEmbedding, "vertex " + std::to_string(fresh_end) + " is not an end of edge " + std::to_string(id));
  const VertexId s = add_vertex();
  const EdgeId fresh = next_edge_++;
  // Mirror image of the above: end 0 moves to s, the new edge takes u's slot.
  auto& urot = rotation_[e.u];
  *std::find(urot.begin(), urot.end(), Dart{id, 0}) = Dart{fresh, 0};
  edges_[id].u = s;
  edges_[fresh] = Edge{fresh, e.u, s};
  rotation_[s] = {Dart{fresh, 1}, Dart{id, 0}};
  std::vector<Dart> walk;
  walk.reserve(outerface_.size() + 1);
  for (Dart d : outerface_) {
    if (d == Dart{id, 0}) {
      walk.push_back(Dart{fresh, 0});
      walk.push_back(Dart{id, 0});
    } else if (d == Dart{id, 1}) {
      walk.push_back(Dart{id, 1});
      walk.push_back(Dart{fresh, 1});
    } else {
      walk.push_back(d);
    }
  }
  outerface_ = std::move(walk);
  return {s, fresh};
}

void PlaneGraph::reserve_ids(VertexId next_vertex, EdgeId next_edge) {
  next_vertex_ = std::max(next_vertex_, next_vertex);
  next_edge_ = std::max(next_edge_, next_edge);
}

// ------------------------------------------------------------ functions

FaceSet trace_faces(const PlaneGraph& g) {
  std::set<Dart> housed;
  for (VertexId v : g.vertices()) {
    for (Dart d : g.rotation(v)) {
      if (!g.has_edge(d.edge) || g.tail(d) != v || !housed.insert(d).second) {
        throw Error(ErrorKind::kMalformedRotation, "edge-end " + to_token(d) + " misplaced or duplicated");
      }
    }
  }
  if (housed.size() != 2 * g.edge_count()) {
    throw Error(ErrorKind::kMalformedRotation, "some edge-end is missing from the rotation");
  }
  FaceSet out;
  std::set<Dart> seen;
  for (Dart d : housed) {
    if (seen.count(d)) continue;
    auto walk = g.face_walk(d);
    for (Dart x : walk) seen.insert(x);
    out.faces.push_back(std::move(walk));  // starts at its smallest dart
  }
  return out;
}

bool is_connected(const PlaneGraph& g) { return is_connected(g.skeleton()); }

int euler_characteristic_check(const PlaneGraph& g) {
  if (g.vertex_count() == 0) return 0;
  if (!is_connected(g)) throw Error(ErrorKind::kDisconnected, "graph is not connected");
  const auto faces = trace_faces(g);
  std::size_t f = faces.faces.size();
  if (g.edge_count() == 0) f = 1;  // a lone vertex has a single face
  return 2 - static_cast<int>(g.vertex_count()) + static_cast<int>(g.edge_count()) - static_cast<int>(f);
}

bool edge_sets_equal(const PlaneGraph& a, const PlaneGraph& b) {
  return edge_sets_equal(a.skeleton(), b.skeleton());
}

PlaneGraph plane_graph_from_drawing(const std::map<VertexId, std::pair<double, double>>& coords,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  PlaneGraph g;
  for (const auto& [v, xy] : coords) g.add_vertex(v);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  auto angle = [&](Dart d) {
    const auto [x0, y0] = coords.at(g.tail(d));
    const auto [x1, y1] = coords.at(g.head(d));
    return std::atan2(y1 - y0, x1 - x0);
  };
  for (VertexId v : g.vertices()) {
    auto rot = g.rotation(v);
    std::sort(rot.begin(), rot.end(), [&](Dart a, Dart b) { return angle(a) > angle(b); });
    g.set_rotation(v, rot);
  }
  if (g.edge_count() == 0) return g;
  // Traced faces keep their face on the left, so the outer face is the one
  // with negative signed area.
  const auto faces = trace_faces(g);
  double best = 0;
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < faces.faces.size(); ++i) {
    double area = 0;
    for (Dart d : faces.faces[i]) {
      const auto [x0, y0] = coords.at(g.tail(d));
      const auto [x1, y1] = coords.at(g.head(d));
      area += x0 * y1 - x1 * y0;
    }
    if (i == 0 || area < best) {
      best = area;
      best_index = i;
    }
  }
  g.set_outerface(faces.faces[best_index]);
  return g;
}

}  // namespace minoru
