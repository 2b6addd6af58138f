#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "minoru/reduce.hpp"
#include "reduce_detail.hpp"

namespace minoru {

namespace {

constexpr const char* kStage = "hamiltonian";

Dart end_at(const PlaneGraph& g, EdgeId e, VertexId x) { return Dart{e, g.edge(e).u == x ? 0 : 1}; }

// Connected after removing `removed` (an empty remainder counts as connected).
bool connected_without(const PlaneGraph& g, const std::set<VertexId>& removed) {
  std::vector<VertexId> rest;
  for (VertexId v : g.vertices()) {
    if (!removed.count(v)) rest.push_back(v);
  }
  if (rest.empty()) return true;
  std::set<VertexId> seen{rest.front()};
  std::deque<VertexId> queue{rest.front()};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (!removed.count(y) && seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen.size() == rest.size();
}

EdgeId cycle_edge(const PlaneGraph& g, VertexId a, VertexId b) {
  std::optional<EdgeId> best;
  for (Dart d : g.rotation(a)) {
    if (g.head(d) == b && g.edge(d.edge).u != g.edge(d.edge).v && (!best || d.edge < *best)) best = d.edge;
  }
  if (!best) {
    throw Error(ErrorKind::kInvalidEmbedding,
                "circuit vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
  }
  return *best;
}

// Darts at circuit vertices strictly clockwise-between the successor and the
// predecessor dart ("inside"), and the rest ("outside").
struct Sides {
  std::vector<EdgeId> edges;  // edges[i] joins circuit[i] and circuit[i+1]
  std::set<Dart> inside;
  std::set<Dart> outside;
};

Sides split_sides(const PlaneGraph& g, const std::vector<VertexId>& circuit) {
  const std::size_t k = circuit.size();
  Sides s;
  for (std::size_t i = 0; i < k; ++i) s.edges.push_back(cycle_edge(g, circuit[i], circuit[(i + 1) % k]));
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId x = circuit[i];
    const Dart to_succ = end_at(g, s.edges[i], x);
    const Dart to_pred = end_at(g, s.edges[(i + k - 1) % k], x);
    for (Dart d = g.cw_next(to_succ); d != to_pred; d = g.cw_next(d)) s.inside.insert(d);
    for (Dart d = g.cw_next(to_pred); d != to_succ; d = g.cw_next(d)) s.outside.insert(d);
  }
  return s;
}

bool reaches_off_circuit(const PlaneGraph& g, const std::set<Dart>& darts, const std::set<VertexId>& on_circuit) {
  return std::any_of(darts.begin(), darts.end(), [&](Dart d) { return !on_circuit.count(g.head(d)); });
}

// Adds edges until every face is a triangle; returns the added edges.
std::vector<EdgeId> triangulate_all(PlaneGraph& g) {
  std::vector<EdgeId> added;
  for (;;) {
    std::optional<std::vector<Dart>> open;
    for (const auto& face : trace_faces(g).faces) {
      if (face.size() > 3) {
        open = face;
        break;
      }
    }
    if (!open) return added;
    const auto& face = *open;
    const std::size_t len = face.size();
    bool done = false;
    for (std::size_t i = 0; i < len && !done; ++i) {
      for (std::size_t j = i + 2; j < len && !done; ++j) {
        if (i == 0 && j == len - 1) continue;
        const VertexId a = g.tail(face[i]);
        const VertexId b = g.tail(face[j]);
        if (a == b || g.dart_between(a, b)) continue;
        added.push_back(g.add_edge_in_face(face[i], face[j]));
        done = true;
      }
    }
    if (!done) throw Error(ErrorKind::kInvalidEmbedding, "face cannot be triangulated without parallel edges");
  }
}

// Simple cycles bounding one face, and 4-cycles bounding two adjacent
// triangles, largest first.
std::vector<std::vector<VertexId>> candidate_circuits(const PlaneGraph& g) {
  std::vector<std::vector<VertexId>> out;
  const auto faces = trace_faces(g).faces;
  std::map<Dart, std::size_t> face_of;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (Dart d : faces[f]) face_of[d] = f;
  }
  for (const auto& face : faces) {
    std::vector<VertexId> cyc;
    for (Dart d : face) cyc.push_back(g.tail(d));
    if (cyc.size() >= 3 && std::set<VertexId>(cyc.begin(), cyc.end()).size() == cyc.size()) out.push_back(cyc);
  }
  for (const auto& face : faces) {
    if (face.size() != 3) continue;
    for (Dart d : face) {
      const auto& other = faces[face_of.at(d.reversed())];
      if (other.size() != 3 || d.reversed() < d) continue;
      const VertexId a = g.tail(d);
      const VertexId b = g.head(d);
      const VertexId c = g.head(g.face_next(d));
      const VertexId e = g.head(g.face_next(d.reversed()));
      if (std::set<VertexId>{a, b, c, e}.size() != 4) continue;
      out.push_back({a, e, b, c});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return out;
}

HamiltonianMajor from_cycle(const PlaneGraph& input, std::vector<VertexId> circuit, std::vector<MinorStep> tail_steps) {
  const std::set<VertexId> on_circuit(circuit.begin(), circuit.end());
  Sides sides = split_sides(input, circuit);
  const bool inside_used = reaches_off_circuit(input, sides.inside, on_circuit);
  const bool outside_used = reaches_off_circuit(input, sides.outside, on_circuit);
  if (inside_used && outside_used) throw Error(ErrorKind::kSeparatingCircuit, "vertices on both sides of the circuit");
  if (outside_used) {
    std::reverse(circuit.begin(), circuit.end());
    sides = split_sides(input, circuit);
  }
  const std::size_t k = circuit.size();

  // Chords on the empty side are set aside and drawn again at the end.
  PlaneGraph g = input;
  std::map<VertexId, std::vector<Dart>> chord_ends;
  std::set<EdgeId> chords;
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId x = circuit[i];
    const Dart to_pred = end_at(input, sides.edges[(i + k - 1) % k], x);
    const Dart to_succ = end_at(input, sides.edges[i], x);
    for (Dart d = input.cw_next(to_pred); d != to_succ; d = input.cw_next(d)) {
      chord_ends[x].push_back(d);
      chords.insert(d.edge);
    }
  }
  for (EdgeId e : chords) g.remove_edge(e);
  std::vector<Dart> walk;
  for (std::size_t i = 0; i < k; ++i) walk.push_back(end_at(g, sides.edges[i], circuit[i]));
  g.set_outerface(walk);
  if (g.face_walk(walk.front()).size() != k) {
    throw Error(ErrorKind::kSeparatingCircuit, "circuit does not bound a face once its outer chords are removed");
  }

  HamiltonianMajor out;
  std::vector<MinorStep> blow_steps;
  const RootedForest forest = spanning_forest(g);
  const BlowupRecord record = detail::blow_up_in_place(g, forest, blow_steps);
  std::vector<AnchorSplit> splits;
  for (const auto& c : record.cycles) splits.push_back(detail::split_anchor(g, c, kStage, out.steps));
  out.cycle = detail::hamiltonian_through(g, splits);
  for (auto& s : blow_steps) s.stage = kStage;
  out.steps.insert(out.steps.end(), blow_steps.begin(), blow_steps.end());
  out.steps.insert(out.steps.end(), tail_steps.begin(), tail_steps.end());

  const Dart on_outer = g.outerface().front();
  for (EdgeId e : chords) {
    const Edge& original = input.edge(e);
    g.add_edge_with_id(e, original.u, original.v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId x = circuit[i];
    auto it = chord_ends.find(x);
    if (it == chord_ends.end()) continue;
    auto rot = g.rotation(x);
    std::erase_if(rot, [&](Dart d) { return chords.count(d.edge) != 0; });
    const Dart to_pred = end_at(g, sides.edges[(i + k - 1) % k], x);
    auto at = std::find(rot.begin(), rot.end(), to_pred);
    rot.insert(at + 1, it->second.begin(), it->second.end());
    g.set_rotation(x, std::move(rot));
  }
  g.retrace_outerface(on_outer);
  out.graph = std::move(g);
  return out;
}

}  // namespace

HamiltonianMajor hamiltonian_major(const PlaneGraph& g, const std::vector<VertexId>& circuit) {
  if (circuit.empty()) throw Error(ErrorKind::kTooSmallCircuit, "circuit has no vertex");
  const std::set<VertexId> on_circuit(circuit.begin(), circuit.end());
  if (on_circuit.size() != circuit.size()) throw Error(ErrorKind::kInvalidEmbedding, "circuit repeats a vertex");
  for (VertexId v : circuit) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::kInvalidEmbedding, "circuit vertex " + std::to_string(v) + " unknown");
  }
  if (!is_connected(g)) throw Error(ErrorKind::kDisconnected, "graph is not connected");
  if (circuit.size() == 2 && !g.skeleton().adjacent(circuit[0], circuit[1])) {
    throw Error(ErrorKind::kInvalidEmbedding, "circuit vertices are not adjacent");
  }
  if (!connected_without(g, on_circuit)) throw Error(ErrorKind::kSeparatingCircuit, "circuit separates the graph");
  if (circuit.size() >= 3) return from_cycle(g, circuit, {});

  // Short circuits: work in a triangulation and take its best face circuit.
  if (g.vertex_count() < 3) {
    HamiltonianMajor out{g, g.vertices(), {}};
    if (g.vertex_count() == 2 && g.edge_count() < 2) {
      const auto& walk = out.graph.outerface();
      out.steps.push_back(MinorStep::delete_edge(out.graph.add_edge_in_face(walk[0], walk[1]), kStage));
      out.graph.retrace_outerface(out.graph.outerface().front());
    }
    return out;
  }
  PlaneGraph tri = g;
  std::vector<MinorStep> deletions;
  for (EdgeId e : triangulate_all(tri)) deletions.push_back(MinorStep::delete_edge(e, kStage));
  std::reverse(deletions.begin(), deletions.end());
  tri.retrace_outerface(tri.outerface().front());
  for (const auto& c : candidate_circuits(tri)) {
    if (connected_without(tri, std::set<VertexId>(c.begin(), c.end()))) return from_cycle(tri, c, deletions);
  }
  throw Error(ErrorKind::kSeparatingCircuit, "triangulation has no non-separating face circuit");
}

HamiltonianMajor hamiltonian_major(const PlaneGraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::kDisconnected, "graph is not connected");
  for (const auto& c : candidate_circuits(g)) {
    if (connected_without(g, std::set<VertexId>(c.begin(), c.end()))) return hamiltonian_major(g, c);
  }
  // No usable face cycle: any single vertex whose removal keeps g connected.
  for (VertexId v : g.vertices()) {
    if (connected_without(g, {v})) return hamiltonian_major(g, std::vector<VertexId>{v});
  }
  throw Error(ErrorKind::kSeparatingCircuit, "no non-separating circuit found");
}

}  // namespace minoru
