#include "minoru/embed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "minoru/verify.hpp"

namespace minoru {

StageOutput pad_sides(const PolygonalEmbedding& p, std::size_t m) {
  require_valid(p, "pad_sides input");
  PolygonalEmbedding cur = p;
  std::vector<MinorStep> steps;
  for (;;) {
    std::optional<std::size_t> short_side;
    for (std::size_t i = 0; i < cur.sides().size(); ++i) {
      const std::size_t len = cur.sides()[i].size();
      if (len > m) {
        throw Error(ErrorKind::kSideTooLong, "side " + std::to_string(i) + " has " + std::to_string(len) +
                                                 " vertices, more than " + std::to_string(m));
      }
      if (len < m && !short_side) short_side = i;
    }
    if (!short_side) break;
    auto sub = subdivide_twin_edge(cur, cur.side_edges(*short_side).front());
    // Later subdivisions are undone first.
    steps.insert(steps.begin(), sub.steps.begin(), sub.steps.end());
    cur = std::move(sub.embedding);
  }
  return {std::move(cur), std::move(steps)};
}

NeighborSpan neighbor_span(const PolygonalEmbedding& p) {
  if (!p.internal_vertices().empty()) {
    throw Error(ErrorKind::kNotOuterplanar,
                std::to_string(p.internal_vertices().size()) + " vertices lie off the outer face");
  }
  NeighborSpan span;
  for (const auto& side : p.sides()) span.order.insert(span.order.end(), side.begin(), side.end());
  const std::size_t count = span.order.size();
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index[span.order[i]] = i;
  const PlaneGraph& g = p.graph();
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t low = i;
    std::size_t high = i;
    for (VertexId y : g.neighbors(span.order[i])) {
      auto it = index.find(y);
      if (it == index.end()) continue;
      low = std::min(low, it->second);
      high = std::max(high, it->second);
    }
    span.low.push_back(low);
    span.high.push_back(high);
  }
  if (count > 0) span.high[0] = count;
  return span;
}

Witness staircase_witness(const PolygonalEmbedding& p, const UniversalEmbedding& u) {
  const NeighborSpan span = neighbor_span(p);
  const auto dim = static_cast<std::size_t>(u.dimension);
  if (span.size() != dim || p.border().size() != u.corner_ids.size()) {
    throw Error(ErrorKind::kSpanViolation, "polygon with " + std::to_string(span.size()) +
                                               " side vertices does not match a grid of dimension " +
                                               std::to_string(dim));
  }
  Witness w;
  for (std::size_t c = 0; c < p.border().size(); ++c) w.branch_sets[p.border()[c]] = {u.corner_ids[c]};
  for (std::size_t i = 0; i < dim; ++i) {
    auto& set = w.branch_sets[span.order[i]];
    const auto row = static_cast<std::int64_t>(i);
    for (std::size_t k = span.low[i] + 1; k <= i; ++k) set.insert(u.grid_vertex(row, static_cast<std::int64_t>(k)));
    for (std::size_t k = i; k < span.high[i]; ++k) set.insert(u.grid_vertex(static_cast<std::int64_t>(k), row));
    set.insert(u.grid_vertex(row, row));
  }

  std::map<VertexId, VertexId> owner;
  for (const auto& [v, set] : w.branch_sets) {
    for (VertexId x : set) owner[x] = v;
  }
  std::set<std::pair<VertexId, VertexId>> realized;
  for (const Edge& e : u.base.graph().edges()) {
    auto a = owner.find(e.u);
    auto b = owner.find(e.v);
    if (a != owner.end() && b != owner.end()) realized.emplace(std::minmax(a->second, b->second));
  }
  for (const Edge& e : p.graph().edges()) {
    if (!e.is_loop() && !realized.count(std::minmax(e.u, e.v))) {
      throw Error(ErrorKind::kSpanViolation,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has no staircase connection");
    }
  }
  return w;
}

Witness sew_witness(const PolygonalEmbedding& minor, const PolygonalEmbedding& major, const Witness& plane) {
  const SewnGraph small = sew(minor);
  const SewnGraph large = sew(major);
  Witness w;
  for (const auto& [v, h] : small.projection) {
    auto it = plane.branch_sets.find(v);
    if (it == plane.branch_sets.end()) {
      throw Error(ErrorKind::kDomainMismatch, "vertex " + std::to_string(v) + " has no branch set");
    }
    auto& target = w.branch_sets[h];
    for (VertexId x : it->second) target.insert(large.projection.at(x));
  }
  return w;
}

EmbedResult universal_embed(const PolygonalEmbedding& p) {
  require_valid(p, "universal_embed input");
  return universal_embed(p, outerplanarize(p));
}

EmbedResult universal_embed(const PolygonalEmbedding& p, OuterplanarResult reduction) {
  const EmbeddingSize size = p.size();
  const std::size_t target = std::max<std::size_t>(size.m + 2 * size.n, 1);

  EmbedResult out;
  out.reduction = std::move(reduction);
  const StageOutput padded = pad_sides(out.reduction.result, target);
  const StageOutput guarded = guard_corners(padded.embedding);
  const StageOutput triangulated = triangulate_inner(guarded.embedding);
  require_valid(triangulated.embedding, "padded outerplanar polygon");
  out.padded = triangulated.embedding;
  out.universal = build_universal(p.signature(), static_cast<std::int64_t>(target));
  out.plane_witness = staircase_witness(out.padded, out.universal);

  Witness w = out.reduction.witness;
  w = compose_witness(w, lift_witness(out.reduction.result, padded.embedding, padded.steps));
  w = compose_witness(w, lift_witness(padded.embedding, guarded.embedding, guarded.steps));
  w = compose_witness(w, lift_witness(guarded.embedding, out.padded, triangulated.steps));
  w = compose_witness(w, sew_witness(out.padded, out.universal.base, out.plane_witness));
  const auto violations = verify_p_minor(p, out.universal.base, w);
  if (!violations.empty()) {
    throw Error(ErrorKind::kSpanViolation, "composed witness fails: " + std::string(to_string(violations.front().kind)));
  }
  out.witness = std::move(w);
  return out;
}

}  // namespace minoru
