#include "minoru/universal.hpp"

#include <string>

namespace minoru {

namespace {

void check_arguments(const Signature& sigma, std::int64_t m) {
  if (sigma.size() < 2) throw Error(ErrorKind::kBadSignature, "need at least two sides");
  if (!sigma.well_paired()) throw Error(ErrorKind::kBadSignature, "letters of " + sigma.to_string() + " are not paired");
  if (m < 1) throw Error(ErrorKind::kBadM, "m must be positive, got " + std::to_string(m));
}

}  // namespace

UniversalCounts universal_counts(const Signature& sigma, std::int64_t m) {
  check_arguments(sigma, m);
  const auto s = static_cast<std::int64_t>(sigma.size());
  const std::int64_t dim = s * m;
  return {dim * (dim - 1) / 2, m, (s * s * m * m + s) / 2};
}

std::int64_t canonical_sewn_count(const Signature& sigma, std::int64_t m) {
  const auto counts = universal_counts(sigma, m);
  return counts.internal + static_cast<std::int64_t>(sigma.size()) * m / 2 + 1;
}

UniversalEmbedding build_universal(const Signature& sigma, std::int64_t m) {
  check_arguments(sigma, m);
  const auto sides = static_cast<std::int64_t>(sigma.size());
  const std::int64_t dim = sides * m;

  UniversalEmbedding u;
  u.dimension = dim;
  PlaneGraph g;
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j <= i; ++j) {
      g.add_vertex(u.grid_vertex(i, j));
      u.coords[u.grid_vertex(i, j)] = {i, j};
    }
  }
  for (std::int64_t c = 0; c < sides; ++c) u.corner_ids.push_back(g.add_vertex());

  // Grid edges: east then north from each vertex, lexicographically.
  std::map<std::pair<VertexId, VertexId>, EdgeId> grid_edge;
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j <= i; ++j) {
      const VertexId here = u.grid_vertex(i, j);
      if (i + 1 < dim) grid_edge[{here, u.grid_vertex(i + 1, j)}] = g.add_edge(here, u.grid_vertex(i + 1, j));
      if (j + 1 <= i) grid_edge[{here, u.grid_vertex(i, j + 1)}] = g.add_edge(here, u.grid_vertex(i, j + 1));
    }
  }

  // Outer cycle c0, (0,0), ..., (m-1,m-1), c1, (m,m), ...
  std::vector<VertexId> cycle;
  for (std::int64_t i = 0; i < dim; ++i) {
    if (i % m == 0) cycle.push_back(u.corner_ids[static_cast<std::size_t>(i / m)]);
    cycle.push_back(u.grid_vertex(i, i));
  }
  std::vector<Dart> outer;
  std::vector<EdgeId> cycle_edges;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    cycle_edges.push_back(g.add_edge(cycle[k], cycle[(k + 1) % cycle.size()]));
    outer.push_back(Dart{cycle_edges.back(), 0});
  }

  // Clockwise rotations: [next on cycle, east, south, previous on cycle] on
  // the diagonal, [north, east, south, west] inside, [next, previous] at corners.
  const auto towards = [&](VertexId from, VertexId to) {
    auto it = grid_edge.find({from, to});
    if (it != grid_edge.end()) return Dart{it->second, 0};
    return Dart{grid_edge.at({to, from}), 1};
  };
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const Dart to_next{cycle_edges[k], 0};
    const Dart to_prev{cycle_edges[(k + cycle.size() - 1) % cycle.size()], 1};
    const VertexId x = cycle[k];
    std::vector<Dart> order{to_next};
    if (auto it = u.coords.find(x); it != u.coords.end()) {
      const auto [i, j] = it->second;
      if (i + 1 < dim) order.push_back(towards(x, u.grid_vertex(i + 1, i)));
      if (i >= 1) order.push_back(towards(x, u.grid_vertex(i, i - 1)));
    }
    order.push_back(to_prev);
    g.set_rotation(x, std::move(order));
  }
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j < i; ++j) {
      const VertexId x = u.grid_vertex(i, j);
      std::vector<Dart> order{towards(x, u.grid_vertex(i, j + 1))};
      if (i + 1 < dim) order.push_back(towards(x, u.grid_vertex(i + 1, j)));
      if (j >= 1) order.push_back(towards(x, u.grid_vertex(i, j - 1)));
      order.push_back(towards(x, u.grid_vertex(i - 1, j)));
      g.set_rotation(x, std::move(order));
    }
  }
  g.set_outerface(std::move(outer));
  u.base = PolygonalEmbedding(std::move(g), u.corner_ids, sigma);
  return u;
}

}  // namespace minoru
