#include <algorithm>
#include <set>
#include <string>

#include "minoru/reduce.hpp"
#include "reduce_detail.hpp"

namespace minoru {

namespace detail {

namespace {

Dart end_at(const PlaneGraph& g, EdgeId e, VertexId x) { return Dart{e, g.edge(e).u == x ? 0 : 1}; }

}  // namespace

AnchorSplit split_anchor(PlaneGraph& g, const BlownCycle& cycle, const std::string& stage,
                         std::vector<MinorStep>& steps) {
  const VertexId r = cycle.anchor;
  const auto nb = outer_neighbours(g, r);
  const std::size_t len = cycle.cycle.size();
  if (len < 2) throw Error(ErrorKind::kMissingAnchorFrame, "cycle of anchor " + std::to_string(r) + " is empty");
  // The edge towards the last cycle vertex stays with the anchor; everything
  // from the outer successor up to it moves to the new vertex.
  const Dart keep_from = end_at(g, cycle.cycle_edges[len - 1], r);

  const auto& rot = g.rotation(r);
  const auto find = [&](Dart d) {
    auto it = std::find(rot.begin(), rot.end(), d);
    if (it == rot.end()) throw Error(ErrorKind::kMissingAnchorFrame, "anchor rotation lacks " + to_token(d));
    return static_cast<std::size_t>(it - rot.begin());
  };
  const std::size_t from_succ = find(nb.to_succ);
  const std::size_t from_keep = find(keep_from);
  std::vector<Dart> moving;
  std::vector<Dart> staying;
  for (std::size_t k = from_succ; k != from_keep; k = (k + 1) % rot.size()) moving.push_back(rot[k]);
  for (std::size_t k = from_keep; k != from_succ; k = (k + 1) % rot.size()) staying.push_back(rot[k]);
  if (staying.back() != nb.to_pred) {
    throw Error(ErrorKind::kMissingAnchorFrame, "anchor " + std::to_string(r) + " has cycle edges on both outer sides");
  }

  const VertexId second = g.add_vertex();
  for (Dart d : moving) g.move_end(d, second, std::nullopt);
  std::vector<Dart> second_rotation = moving;
  AnchorSplit out;
  out.first = r;
  out.second = second;
  std::vector<MinorStep> undo;
  if (len == 2) {
    const VertexId leaf = cycle.cycle[1];
    const EdgeId bridge = g.add_edge(leaf, second);
    auto leaf_rotation = g.rotation(leaf);
    leaf_rotation.pop_back();
    leaf_rotation.insert(std::find(leaf_rotation.begin(), leaf_rotation.end(), keep_from.reversed()) + 1,
                         Dart{bridge, 0});
    g.set_rotation(leaf, std::move(leaf_rotation));
    second_rotation.push_back(Dart{bridge, 1});
    undo.push_back(MinorStep::delete_edge(bridge, stage));
    out.path = {r, leaf, second};
  } else {
    out.path.push_back(r);
    for (std::size_t i = len - 1; i >= 1; --i) out.path.push_back(cycle.cycle[i]);
    out.path.push_back(second);
  }
  out.edge_anchor = g.add_edge(r, second);
  staying.push_back(Dart{out.edge_anchor, 0});
  second_rotation.push_back(Dart{out.edge_anchor, 1});
  g.set_rotation(r, std::move(staying));
  g.set_rotation(second, std::move(second_rotation));

  auto walk = g.outerface();
  walk.insert(std::find(walk.begin(), walk.end(), nb.to_succ), Dart{out.edge_anchor, 0});
  g.set_outerface(std::move(walk));

  undo.push_back(MinorStep::contract(out.edge_anchor, r, stage));
  steps.insert(steps.end(), undo.begin(), undo.end());
  out.inside_edges = cycle.extra_edges;
  out.frame = {nb.pred, out.path[1], out.path[out.path.size() - 2], nb.succ};
  return out;
}

std::vector<VertexId> hamiltonian_through(const PlaneGraph& g, const std::vector<AnchorSplit>& splits) {
  std::map<VertexId, const AnchorSplit*> by_first;
  for (const auto& s : splits) by_first[s.first] = &s;
  std::vector<VertexId> cycle;
  std::set<VertexId> emitted;
  for (VertexId v : g.outerface_vertices()) {
    if (emitted.count(v)) continue;
    if (auto it = by_first.find(v); it != by_first.end()) {
      for (VertexId x : it->second->path) {
        cycle.push_back(x);
        emitted.insert(x);
      }
    } else {
      cycle.push_back(v);
      emitted.insert(v);
    }
  }
  return cycle;
}

}  // namespace detail

SplitResult split_anchors(const PlaneGraph& blown, const BlowupRecord& record) {
  SplitResult out;
  out.graph = blown;
  for (const auto& c : record.cycles) {
    out.splits.push_back(detail::split_anchor(out.graph, c, "split", out.steps));
  }
  out.hamiltonian_cycle = detail::hamiltonian_through(out.graph, out.splits);
  return out;
}

TwinOrder twin_order(const PolygonalEmbedding& p) {
  TwinOrder order;
  for (VertexId v : p.graph().outerface_vertices()) order.rank[v] = p.rank(v);
  return order;
}

namespace {

// Rank of the vertex at `pos` on side `side`; the closing corner of the last
// side counts as the end of the walk, not its start.
std::size_t path_rank(const PolygonalEmbedding& p, std::size_t side, std::size_t pos) {
  const auto path = p.side_path(side);
  if (side + 1 == p.sides().size() && pos + 1 == path.size()) return p.graph().outerface().size();
  return p.rank(path[pos]);
}

}  // namespace

TwinSplitResult twin_split_all(const PolygonalEmbedding& blown, const BlowupRecord& record) {
  std::vector<const BlownCycle*> order;
  for (const auto& c : record.cycles) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [&](const BlownCycle* a, const BlownCycle* b) { return blown.rank(a->anchor) < blown.rank(b->anchor); });

  TwinSplitResult out;
  out.embedding = blown;
  std::set<EdgeId> edge_anchors;
  std::vector<std::vector<MinorStep>> groups;
  for (const BlownCycle* cycle : order) {
    const PolygonalEmbedding& cur = out.embedding;
    const VertexId a = cycle->anchor;
    if (cur.is_corner(a)) throw Error(ErrorKind::kAnchorIsCorner, "anchor " + std::to_string(a) + " is a corner");
    const auto [side, k] = cur.side_position(a);
    const std::size_t twin = cur.signature().twin_side(side);
    const std::size_t len = cur.sides()[side].size();
    const bool reversed = cur.signature().reversed_pair(side);
    const auto mirrored = [&](std::size_t pos) { return reversed ? len + 1 - pos : pos; };
    const std::size_t pos_b = mirrored(k);
    const std::size_t pos_x = mirrored(k - 1);
    const std::size_t pos_y = mirrored(k + 1);
    const auto twin_path = cur.side_path(twin);
    const VertexId b = twin_path[pos_b];

    const bool toward_y =
        path_rank(cur, side, k) < path_rank(cur, twin, pos_b) || path_rank(cur, twin, pos_y) < path_rank(cur, twin, pos_b);
    const std::size_t other = toward_y ? pos_y : pos_x;
    const EdgeId target = cur.side_edges(twin)[std::min(pos_b, other)];
    if (edge_anchors.count(target)) {
      throw Error(ErrorKind::kEdgeAnchorViolation, "edge-anchor " + std::to_string(target) + " would be subdivided");
    }

    PlaneGraph g = cur.graph();
    std::vector<MinorStep> group;
    AnchorSplit split = detail::split_anchor(g, *cycle, "twin-split", group);
    const VertexId fresh = g.subdivide(target).first;
    PolygonalEmbedding next(std::move(g), cur.border(), cur.signature());
    group.push_back(MinorStep::contract(next.graph().dart_between(fresh, b)->edge, b, "twin-split"));

    const std::set<VertexId> expected{b, fresh};
    const std::set<VertexId> actual{twin_vertex(next, split.first), twin_vertex(next, split.second)};
    if (actual != expected) throw Error(ErrorKind::kEdgeAnchorViolation, "split anchor lost its twins");
    if (edge_anchors.count(twin_edge(next, split.edge_anchor))) {
      throw Error(ErrorKind::kEdgeAnchorViolation, "two edge-anchors became twins");
    }
    edge_anchors.insert(split.edge_anchor);
    out.embedding = std::move(next);
    out.splits.push_back(std::move(split));
    groups.push_back(std::move(group));
  }
  for (const auto& s : out.splits) {
    if (edge_anchors.count(twin_edge(out.embedding, s.edge_anchor))) {
      throw Error(ErrorKind::kEdgeAnchorViolation, "two edge-anchors became twins");
    }
  }
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) out.steps.insert(out.steps.end(), it->begin(), it->end());
  return out;
}

StageOutput swap_all(const PolygonalEmbedding& split, const std::vector<AnchorSplit>& splits) {
  std::set<EdgeId> edge_anchors;
  for (const auto& s : splits) edge_anchors.insert(s.edge_anchor);
  PolygonalEmbedding cur = split;
  for (const auto& s : splits) {
    const VertexId twin_first = twin_vertex(cur, s.first);
    const VertexId twin_second = twin_vertex(cur, s.second);
    const EdgeId twin = twin_edge(cur, s.edge_anchor);
    if (edge_anchors.count(twin)) {
      throw Error(ErrorKind::kTwinIsEdgeAnchor, "edge-anchor " + std::to_string(s.edge_anchor) + " twinned with another");
    }
    const auto [side, t] = *cur.side_edge_position(twin);
    const auto twin_path = cur.side_path(side);
    const VertexId s0 = twin_path[t];
    const VertexId s1 = twin_path[t + 1];
    if (std::set<VertexId>{s0, s1} != std::set<VertexId>{twin_first, twin_second}) {
      throw Error(ErrorKind::kInvalidEmbedding, "twin of an edge-anchor does not join the anchor twins");
    }

    PlaneGraph g = cur.graph();
    std::vector<std::pair<VertexId, VertexId>> inside;
    for (EdgeId e : s.inside_edges) inside.emplace_back(g.edge(e).u, g.edge(e).v);
    g.remove_edge(s.edge_anchor);
    for (EdgeId e : s.inside_edges) g.remove_edge(e);

    // Boundary positions 0 = s0, 1..r = copies, r+1 = s1.
    const std::size_t r = s.path.size() - 2;
    const bool along = s0 == twin_first;
    std::vector<VertexId> boundary(r + 2);
    boundary[0] = s0;
    boundary[r + 1] = s1;
    std::map<VertexId, std::size_t> position{{s.first, along ? 0 : r + 1}, {s.second, along ? r + 1 : 0}};
    for (std::size_t i = 1; i <= r; ++i) {
      const std::size_t at = along ? i : r + 1 - i;
      boundary[at] = g.add_vertex();
      position[s.path[i]] = at;
    }
    std::vector<Dart> forward(r + 2);
    std::vector<Dart> backward(r + 2);
    for (std::size_t i = 0; i <= r; ++i) {
      const EdgeId e = g.add_edge(boundary[i], boundary[i + 1]);
      forward[i] = Dart{e, 0};
      backward[i + 1] = Dart{e, 1};
    }
    const std::size_t ring = r + 2;
    std::vector<std::vector<std::pair<std::size_t, Dart>>> chords(ring);
    for (const auto& [u, v] : inside) {
      const std::size_t pu = position.at(u);
      const std::size_t pv = position.at(v);
      const EdgeId e = g.add_edge(boundary[pu], boundary[pv]);
      chords[pu].emplace_back((pv + ring - pu) % ring, Dart{e, 0});
      chords[pv].emplace_back((pu + ring - pv) % ring, Dart{e, 1});
    }
    for (auto& list : chords) std::sort(list.begin(), list.end());

    const auto strip = [&](VertexId x, std::size_t pos) {
      std::set<Dart> fresh;
      for (const auto& [o, d] : chords[pos]) fresh.insert(d);
      if (pos == 0) fresh.insert(forward[0]);
      if (pos == r + 1) fresh.insert(backward[r + 1]);
      std::vector<Dart> rot;
      for (Dart d : g.rotation(x)) {
        if (!fresh.count(d)) rot.push_back(d);
      }
      return rot;
    };
    const Dart twin_at_s0{twin, g.edge(twin).u == s0 ? 0 : 1};
    {
      auto rot = strip(s0, 0);
      std::vector<Dart> block{forward[0]};
      for (const auto& [o, d] : chords[0]) block.push_back(d);
      rot.insert(std::find(rot.begin(), rot.end(), twin_at_s0), block.begin(), block.end());
      g.set_rotation(s0, std::move(rot));
    }
    {
      auto rot = strip(s1, r + 1);
      std::vector<Dart> block;
      for (const auto& [o, d] : chords[r + 1]) block.push_back(d);
      block.push_back(backward[r + 1]);
      rot.insert(std::find(rot.begin(), rot.end(), twin_at_s0.reversed()) + 1, block.begin(), block.end());
      g.set_rotation(s1, std::move(rot));
    }
    for (std::size_t i = 1; i <= r; ++i) {
      std::vector<Dart> rot{forward[i]};
      for (const auto& [o, d] : chords[i]) rot.push_back(d);
      rot.push_back(backward[i]);
      g.set_rotation(boundary[i], std::move(rot));
    }
    g.retrace_outerface(forward[0]);
    cur = PolygonalEmbedding(std::move(g), cur.border(), cur.signature());
  }
  return {std::move(cur), {}};
}

Witness lift_witness(const PolygonalEmbedding& input, const PolygonalEmbedding& output,
                     const std::vector<MinorStep>& steps) {
  const auto sets = branch_sets_from_steps(output.graph().skeleton(), steps);
  const SewnGraph in = sew(input);
  const SewnGraph out = sew(output);
  Witness w;
  for (const auto& [v, h] : in.projection) {
    auto it = sets.find(v);
    if (it == sets.end()) {
      throw Error(ErrorKind::kDomainMismatch, "vertex " + std::to_string(v) + " has no branch set in the major");
    }
    auto& target = w.branch_sets[h];
    for (VertexId z : it->second) target.insert(out.projection.at(z));
  }
  return w;
}

OuterplanarResult outerplanarize(const PolygonalEmbedding& p) {
  require_valid(p, "outerplanarize input");
  OuterplanarResult out;
  const StageOutput guard = guard_corners(p);
  require_valid(guard.embedding, "guard_corners output");
  const StageOutput tri = triangulate_inner(guard.embedding);
  require_valid(tri.embedding, "triangulate_inner output");
  out.forest = spanning_forest(tri.embedding);
  out.blown = blow_up(tri.embedding, out.forest);
  require_valid(out.blown.embedding, "blow_up output");
  out.split = twin_split_all(out.blown.embedding, out.blown.record);
  require_valid(out.split.embedding, "twin_split_all output");
  const StageOutput swapped = swap_all(out.split.embedding, out.split.splits);
  require_valid(swapped.embedding, "swap_all output");

  Witness w = lift_witness(p, guard.embedding, guard.steps);
  w = compose_witness(w, lift_witness(guard.embedding, tri.embedding, tri.steps));
  w = compose_witness(w, lift_witness(tri.embedding, out.blown.embedding, out.blown.steps));
  w = compose_witness(w, lift_witness(out.blown.embedding, out.split.embedding, out.split.steps));
  w = compose_witness(w, lift_witness(out.split.embedding, swapped.embedding, swapped.steps));

  const std::vector<const std::vector<MinorStep>*> stages{&guard.steps, &tri.steps, &out.blown.steps, &out.split.steps};
  for (const auto* steps : stages) {
    out.trace.insert(out.trace.end(), steps->begin(), steps->end());
  }
  out.guarded = guard.embedding;
  out.triangulated = tri.embedding;
  out.result = swapped.embedding;
  out.witness = std::move(w);
  return out;
}

}  // namespace minoru
