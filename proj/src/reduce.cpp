#include "minoru/reduce.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "reduce_detail.hpp"

namespace minoru {

namespace detail {

OuterNeighbours outer_neighbours(const PlaneGraph& g, VertexId x) {
  const auto& walk = g.outerface();
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (g.tail(walk[i]) == x) {
      const Dart in = walk[(i + walk.size() - 1) % walk.size()];
      return {g.tail(in), g.head(walk[i]), in.reversed(), walk[i]};
    }
  }
  throw Error(ErrorKind::kMissingAnchorFrame, "vertex " + std::to_string(x) + " is not on the outer face");
}

std::vector<Dart> inner_face_darts(const PlaneGraph& g) {
  std::set<Dart> outer(g.outerface().begin(), g.outerface().end());
  std::vector<Dart> out;
  for (const auto& face : trace_faces(g).faces) {
    if (!outer.count(face.front())) out.push_back(face.front());
  }
  return out;
}

}  // namespace detail

using detail::outer_neighbours;

// ------------------------------------------------------------ corners

StageOutput guard_corners(const PolygonalEmbedding& p) {
  PlaneGraph g = p.graph();
  std::vector<MinorStep> steps;
  for (VertexId c : p.border()) {
    const auto nb = outer_neighbours(g, c);
    if (p.is_corner(nb.pred) || p.is_corner(nb.succ)) {
      throw Error(ErrorKind::kCannotAvoidCorner, "corner " + std::to_string(c) + " has a corner neighbour");
    }
    if (g.face_walk(nb.to_pred).size() == 3) continue;
    const Dart before_p = g.face_next(nb.to_pred);
    const Dart before_q = nb.to_succ.reversed();
    steps.push_back(MinorStep::delete_edge(g.add_edge_in_face(before_p, before_q), "guard"));
  }
  return {PolygonalEmbedding(std::move(g), p.border(), p.signature()), std::move(steps)};
}

StageOutput triangulate_inner(const PolygonalEmbedding& p) {
  PlaneGraph g = p.graph();
  std::vector<MinorStep> steps;
  const std::set<VertexId> corners(p.border().begin(), p.border().end());
  for (;;) {
    std::optional<std::vector<Dart>> open;
    for (Dart start : detail::inner_face_darts(g)) {
      auto face = g.face_walk(start);
      if (face.size() > 3) {
        open = std::move(face);
        break;
      }
    }
    if (!open) break;
    const auto& face = *open;
    const std::size_t len = face.size();
    std::vector<VertexId> at(len);
    for (std::size_t i = 0; i < len; ++i) at[i] = g.tail(face[i]);

    std::optional<std::size_t> hub;
    for (std::size_t i = 0; i < len; ++i) {
      if (corners.count(at[i])) continue;
      if (!hub || at[i] < at[*hub]) hub = i;
    }
    if (!hub) throw Error(ErrorKind::kCannotAvoidCorner, "inner face made of corners only");
    Dart from;
    Dart to;
    if (std::count(at.begin(), at.end(), at[*hub]) == 1 && !corners.count(at[(*hub + 2) % len])) {
      from = face[*hub];
      to = face[(*hub + 2) % len];
    } else {
      bool found = false;
      for (std::size_t i = 0; i < len && !found; ++i) {
        const std::size_t before = (i + len - 1) % len;
        const std::size_t after = (i + 1) % len;
        if (at[before] != at[after] && !corners.count(at[before]) && !corners.count(at[after])) {
          from = face[before];
          to = face[after];
          found = true;
        }
      }
      if (!found) throw Error(ErrorKind::kCannotAvoidCorner, "no diagonal avoids the corners");
    }
    steps.push_back(MinorStep::delete_edge(g.add_edge_in_face(from, to), "triangulate"));
  }
  std::reverse(steps.begin(), steps.end());
  return {PolygonalEmbedding(std::move(g), p.border(), p.signature()), std::move(steps)};
}

// ------------------------------------------------------------- forest

std::size_t RootedForest::edge_count() const {
  std::size_t total = 0;
  for (const auto& t : trees) total += t.edges.size();
  return total;
}

RootedForest spanning_forest(const PolygonalEmbedding& p) { return spanning_forest(p.graph()); }

RootedForest spanning_forest(const PlaneGraph& g) {
  const Graph skeleton = g.skeleton();
  const auto outer = g.outerface_vertices();
  const std::set<VertexId> on_outer(outer.begin(), outer.end());
  RootedForest forest;
  if (outer.empty()) return forest;

  // BFS tree from the least outer vertex, neighbours by increasing id.
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> tree;
  std::set<VertexId> seen{*on_outer.begin()};
  std::deque<VertexId> queue{*on_outer.begin()};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    std::vector<std::pair<VertexId, EdgeId>> options;
    for (EdgeId e : skeleton.incident(x)) options.emplace_back(skeleton.edge(e).other(x), e);
    std::sort(options.begin(), options.end());
    for (const auto& [y, e] : options) {
      if (!seen.insert(y).second) continue;
      tree[x].emplace_back(y, e);
      tree[y].emplace_back(x, e);
      queue.push_back(y);
    }
  }
  if (seen.size() != g.vertex_count()) throw Error(ErrorKind::kDisconnected, "graph is not connected");

  const auto drop = [&](VertexId a, VertexId b, EdgeId e) {
    std::erase(tree[a], std::make_pair(b, e));
    std::erase(tree[b], std::make_pair(a, e));
  };
  // Cut outer-to-outer paths until every component holds one outer vertex.
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId s : on_outer) {
      std::map<VertexId, std::pair<VertexId, EdgeId>> parent{{s, {s, -1}}};
      std::deque<VertexId> q{s};
      std::optional<VertexId> hit;
      while (!q.empty() && !hit) {
        const VertexId x = q.front();
        q.pop_front();
        auto next = tree[x];
        std::sort(next.begin(), next.end());
        for (const auto& [y, e] : next) {
          if (parent.count(y)) continue;
          parent[y] = {x, e};
          if (on_outer.count(y)) {
            hit = y;
            break;
          }
          q.push_back(y);
        }
      }
      if (!hit) continue;
      const VertexId high = std::max(s, *hit);
      // Walk back from the hit; the path edge incident to `high` is cut.
      VertexId x = *hit;
      while (x != s) {
        const auto [up, e] = parent[x];
        if (x == high || up == high) {
          drop(x, up, e);
          break;
        }
        x = up;
      }
      changed = true;
      break;
    }
  }

  for (VertexId r : on_outer) {
    RootedTree t{r, {}};
    std::set<VertexId> visited{r};
    std::deque<VertexId> q{r};
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop_front();
      for (const auto& [y, e] : tree[x]) {
        if (!visited.insert(y).second) continue;
        t.edges.push_back(e);
        q.push_back(y);
      }
    }
    std::sort(t.edges.begin(), t.edges.end());
    if (!t.edges.empty()) forest.trees.push_back(std::move(t));
  }
  return forest;
}

// ------------------------------------------------------------ blow-up

namespace {

void check_forest(const PlaneGraph& g, const RootedForest& forest) {
  const auto outer = g.outerface_vertices();
  const std::set<VertexId> on_outer(outer.begin(), outer.end());
  std::set<VertexId> covered;
  for (const auto& t : forest.trees) {
    if (!on_outer.count(t.root)) throw Error(ErrorKind::kForestMismatch, "root off the outer face");
    if (!covered.insert(t.root).second) throw Error(ErrorKind::kForestMismatch, "trees share a root");
    for (EdgeId e : t.edges) {
      if (!g.has_edge(e)) throw Error(ErrorKind::kForestMismatch, "unknown tree edge " + std::to_string(e));
      for (VertexId x : {g.edge(e).u, g.edge(e).v}) {
        if (x != t.root && on_outer.count(x)) {
          throw Error(ErrorKind::kForestMismatch, "tree meets the outer face away from its root");
        }
      }
    }
    std::set<VertexId> mine{t.root};
    for (EdgeId e : t.edges) {
      mine.insert(g.edge(e).u);
      mine.insert(g.edge(e).v);
    }
    if (mine.size() != t.edges.size() + 1) throw Error(ErrorKind::kForestMismatch, "tree edges do not form a tree");
    for (VertexId x : mine) {
      if (x != t.root && !covered.insert(x).second) throw Error(ErrorKind::kForestMismatch, "trees overlap");
    }
  }
  for (VertexId x : g.vertices()) {
    if (!on_outer.count(x) && !covered.count(x)) throw Error(ErrorKind::kForestMismatch, "internal vertex " + std::to_string(x) + " uncovered");
  }
}

// Plane Euler tour of the tree, i.e. the single face walk of the tree alone,
// starting with the first tree edge clockwise after the outer successor.
std::vector<Dart> euler_tour(const PlaneGraph& g, const RootedTree& t) {
  const std::set<EdgeId> in_tree(t.edges.begin(), t.edges.end());
  const auto nb = outer_neighbours(g, t.root);
  Dart first = g.cw_next(nb.to_succ);
  while (!in_tree.count(first.edge)) first = g.cw_next(first);
  std::vector<Dart> tour;
  Dart cur = first;
  do {
    tour.push_back(cur);
    Dart next = g.cw_next(cur.reversed());
    while (!in_tree.count(next.edge)) next = g.cw_next(next);
    cur = next;
  } while (cur != first && tour.size() <= 2 * t.edges.size());
  if (tour.size() != 2 * t.edges.size()) throw Error(ErrorKind::kForestMismatch, "tree is not connected");
  return tour;
}

BlownCycle blow_up_tree(PlaneGraph& g, const RootedTree& t, std::vector<MinorStep>& steps) {
  const std::vector<Dart> tour = euler_tour(g, t);
  const std::size_t len = tour.size();
  const std::set<EdgeId> in_tree(t.edges.begin(), t.edges.end());
  BlownCycle out;
  out.anchor = t.root;
  if (len == 2) {
    out.cycle = {t.root, g.head(tour[0])};
    out.cycle_edges = {tour[0].edge, tour[0].edge};
    return out;
  }

  std::vector<VertexId> at(len);
  for (std::size_t i = 0; i < len; ++i) at[i] = g.tail(tour[i]);
  std::vector<bool> downward(len);
  std::set<EdgeId> used;
  for (std::size_t i = 0; i < len; ++i) downward[i] = used.insert(tour[i].edge).second;

  // Non-tree edge-ends in the angle between the incoming and outgoing tour
  // darts, in rotation order.
  std::vector<std::vector<Dart>> angle(len);
  for (std::size_t i = 0; i < len; ++i) {
    const Dart back = tour[(i + len - 1) % len].reversed();
    for (Dart d = g.cw_next(back); d != tour[i]; d = g.cw_next(d)) {
      if (!in_tree.count(d.edge)) angle[i].push_back(d);
    }
  }

  std::vector<VertexId> copy(len);
  std::map<VertexId, std::vector<std::size_t>> occurrences;
  for (std::size_t i = 0; i < len; ++i) {
    auto& occ = occurrences[at[i]];
    copy[i] = occ.empty() ? at[i] : g.add_vertex();
    occ.push_back(i);
  }

  for (std::size_t i = 0; i < len; ++i) {
    if (copy[i] == at[i]) continue;
    for (Dart d : angle[i]) g.move_end(d, copy[i], std::nullopt);
  }
  std::vector<Dart> forward(len);
  std::vector<Dart> backward(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t j = (i + 1) % len;
    if (downward[i]) {
      if (copy[i] != at[i]) g.move_end(tour[i], copy[i], std::nullopt);
      forward[i] = tour[i];
      backward[j] = tour[i].reversed();
    } else {
      const EdgeId e = g.add_edge(copy[i], copy[j]);
      forward[i] = Dart{e, 0};
      backward[j] = Dart{e, 1};
      out.upward_edges.push_back(e);
    }
    out.cycle_edges.push_back(forward[i].edge);
  }

  std::vector<std::vector<std::pair<std::size_t, Dart>>> chords(len);
  std::vector<MinorStep> contractions;
  for (const auto& [vertex, occ] : occurrences) {
    for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
      const EdgeId e = g.add_edge(copy[occ[k]], copy[occ[k + 1]]);
      out.extra_edges.push_back(e);
      chords[occ[k]].emplace_back((occ[k + 1] + len - occ[k]) % len, Dart{e, 0});
      chords[occ[k + 1]].emplace_back((occ[k] + len - occ[k + 1]) % len, Dart{e, 1});
      contractions.push_back(MinorStep::contract(e, vertex, "blow-up"));
    }
  }

  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Dart> order{backward[i]};
    order.insert(order.end(), angle[i].begin(), angle[i].end());
    order.push_back(forward[i]);
    std::sort(chords[i].begin(), chords[i].end());
    for (const auto& [offset, d] : chords[i]) order.push_back(d);
    g.set_rotation(copy[i], std::move(order));
  }
  out.cycle = copy;
  steps.insert(steps.end(), contractions.begin(), contractions.end());
  for (EdgeId e : out.upward_edges) steps.push_back(MinorStep::delete_edge(e, "blow-up"));
  return out;
}

}  // namespace

BlowupRecord detail::blow_up_in_place(PlaneGraph& g, const RootedForest& forest, std::vector<MinorStep>& steps) {
  check_forest(g, forest);
  BlowupRecord record;
  for (const auto& t : forest.trees) record.cycles.push_back(blow_up_tree(g, t, steps));
  return record;
}

BlowupResult blow_up(const PolygonalEmbedding& p, const RootedForest& forest) {
  PlaneGraph g = p.graph();
  BlowupResult out;
  out.record = detail::blow_up_in_place(g, forest, out.steps);
  out.embedding = PolygonalEmbedding(std::move(g), p.border(), p.signature());
  return out;
}

}  // namespace minoru
