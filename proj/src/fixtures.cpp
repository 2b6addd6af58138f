#include "minoru/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

namespace minoru::fixtures {

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t count) {
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

std::vector<std::vector<Dart>> inner_faces(const PlaneGraph& g) {
  const std::set<Dart> outer(g.outerface().begin(), g.outerface().end());
  std::vector<std::vector<Dart>> out;
  for (auto& face : trace_faces(g).faces) {
    if (!outer.count(face.front())) out.push_back(std::move(face));
  }
  return out;
}

// Puts a new vertex inside the triangle to the left of `side` and joins it to
// the three corners of that triangle.
VertexId stack_vertex(PlaneGraph& g, Dart side) {
  const std::vector<Dart> face = g.face_walk(side);
  const VertexId centre = g.add_vertex();
  std::vector<Dart> spokes;
  for (Dart d : face) {
    const VertexId t = g.tail(d);
    const EdgeId e = g.add_edge(t, centre);
    auto rot = g.rotation(t);
    rot.pop_back();
    rot.insert(std::find(rot.begin(), rot.end(), d), Dart{e, 0});
    g.set_rotation(t, std::move(rot));
    spokes.push_back(Dart{e, 1});
  }
  // The triangle is walked counterclockwise, so the spokes go clockwise in
  // reverse walk order.
  std::reverse(spokes.begin(), spokes.end());
  g.set_rotation(centre, spokes);
  return centre;
}

// Cycle with corners, sides of the given lengths, rotations [next, previous].
PolygonalEmbedding polygon(const Signature& sigma, const std::vector<std::size_t>& lengths) {
  PlaneGraph g;
  std::vector<VertexId> cycle;
  std::vector<VertexId> border;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    border.push_back(g.add_vertex());
    cycle.push_back(border.back());
    for (std::size_t k = 0; k < lengths[i]; ++k) cycle.push_back(g.add_vertex());
  }
  std::vector<EdgeId> edges;
  for (std::size_t k = 0; k < cycle.size(); ++k) edges.push_back(g.add_edge(cycle[k], cycle[(k + 1) % cycle.size()]));
  std::vector<Dart> outer;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    g.set_rotation(cycle[k], {Dart{edges[k], 0}, Dart{edges[(k + cycle.size() - 1) % cycle.size()], 1}});
    outer.push_back(Dart{edges[k], 0});
  }
  g.set_outerface(std::move(outer));
  return PolygonalEmbedding(std::move(g), std::move(border), sigma);
}

// Random ear cuts until every inner face is a triangle.
PolygonalEmbedding ear_triangulate(const PolygonalEmbedding& p, Rng& rng) {
  PlaneGraph g = p.graph();
  for (;;) {
    std::vector<Dart> open;
    for (const auto& face : inner_faces(g)) {
      if (face.size() > 3) {
        open = face;
        break;
      }
    }
    if (open.empty()) break;
    const std::size_t len = open.size();
    std::vector<std::size_t> ears;
    for (std::size_t i = 0; i < len; ++i) {
      const VertexId before = g.tail(open[(i + len - 1) % len]);
      const VertexId after = g.tail(open[(i + 1) % len]);
      if (before != after && !p.is_corner(before) && !p.is_corner(after) && !g.dart_between(before, after)) {
        ears.push_back(i);
      }
    }
    if (ears.empty()) throw Error(ErrorKind::kCannotAvoidCorner, "polygon has no ear");
    const std::size_t i = ears[pick(rng, ears.size())];
    g.add_edge_in_face(open[(i + len - 1) % len], open[(i + 1) % len]);
  }
  return PolygonalEmbedding(std::move(g), p.border(), p.signature());
}

}  // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* raw = std::getenv("MINOR_UNIVERSAL_SEED"); raw != nullptr && *raw != '\0') {
    try {
      return std::stoull(raw);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, std::string("MINOR_UNIVERSAL_SEED is not an integer: ") + raw);
    }
  }
  return fallback;
}

PolygonalEmbedding random_triangulated(std::uint64_t seed, const RandomSpec& spec) {
  const Signature& sigma = spec.signature;
  if (sigma.size() < 2 || !sigma.well_paired()) {
    throw Error(ErrorKind::kBadSignature, "cannot build a fixture for '" + sigma.to_string() + "'");
  }
  if (spec.max_side < 1) throw Error(ErrorKind::kBadM, "sides need at least one vertex");
  Rng rng(seed);
  std::map<std::string, std::size_t> by_letter;
  for (const Symbol& s : sigma.symbols()) {
    if (!by_letter.count(s.letter)) by_letter[s.letter] = 1 + pick(rng, spec.max_side);
  }
  std::vector<std::size_t> lengths;
  for (const Symbol& s : sigma.symbols()) lengths.push_back(by_letter[s.letter]);
  // A triangulated interior needs three non-corner vertices.
  while (std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}) < 3) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i].letter == sigma[0].letter) ++lengths[i];
    }
  }
  PolygonalEmbedding p = guard_corners(polygon(sigma, lengths)).embedding;
  p = ear_triangulate(p, rng);
  PlaneGraph g = p.graph();
  for (std::size_t k = 0; k < spec.internal; ++k) {
    std::vector<Dart> candidates;
    for (const auto& face : inner_faces(g)) {
      const bool touches_corner = std::any_of(face.begin(), face.end(), [&](Dart d) { return p.is_corner(g.tail(d)); });
      if (!touches_corner) candidates.push_back(face.front());
    }
    stack_vertex(g, candidates[pick(rng, candidates.size())]);
  }
  return PolygonalEmbedding(std::move(g), p.border(), p.signature());
}

PolygonalEmbedding sphere_outerplanar(std::uint64_t seed, std::size_t side_length) {
  if (side_length < 2) throw Error(ErrorKind::kBadM, "sphere fixture needs sides of at least two vertices");
  Rng rng(seed);
  const Signature sigma = Signature::parse(std::string("a0 ~a0"));
  return ear_triangulate(guard_corners(polygon(sigma, {side_length, side_length})).embedding, rng);
}

PolygonalEmbedding k6_torus() {
  const std::map<VertexId, std::pair<double, double>> coords{
      {1, {0, 1.5}},     {2, {1, 0}},       {3, {-1, 0}},      {4, {2, 1.5}},     {5, {0, -1.5}},
      {6, {-2, 1.5}},    {34, {-4, -3}},    {35, {-4, 3}},     {36, {4, 3}},      {37, {4, -3}},
      {76, {-1.5, 3}},   {77, {0, 3}},      {78, {1.5, 3}},    {82, {3, 3}},      {79, {-1.5, -3}},
      {80, {0, -3}},     {81, {1.5, -3}},   {83, {3, -3}},     {84, {4, 1.5}},    {86, {4, 0.75}},
      {88, {4, -1}},     {85, {-4, 1.5}},   {87, {-4, 0.75}},  {89, {-4, -1}},
  };
  const std::vector<std::pair<VertexId, VertexId>> edges{
      // K6 edges drawn inside the rectangle
      {6, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}, {1, 6}, {3, 1}, {1, 2}, {2, 3},
      // edges leaving through a side
      {76, 6}, {79, 5}, {1, 77}, {80, 5}, {4, 78}, {81, 5}, {4, 82}, {4, 84}, {2, 86}, {85, 6}, {87, 6},
      {83, 88}, {89, 3},
      // rectangle, clockwise from the top-left corner
      {35, 76}, {76, 77}, {77, 78}, {78, 82}, {82, 36}, {36, 84}, {84, 86}, {86, 88}, {88, 37},
      {37, 83}, {83, 81}, {81, 80}, {80, 79}, {79, 34}, {34, 89}, {89, 87}, {87, 85}, {85, 35},
  };
  return PolygonalEmbedding(plane_graph_from_drawing(coords, edges), {35, 36, 37, 34},
                            Signature::parse(std::string("a1 a2 ~a1 ~a2")));
}

TreeFixture hanging_tree() {
  // Corners 0 and 4; the tree hangs from side vertex 2.
  const std::map<VertexId, std::pair<double, double>> coords{
      {0, {-4, 0}},   {1, {-2, 2}},     {2, {0, 2.5}},    {3, {2, 2}},      {4, {4, 0}},    {5, {2, -2}},
      {6, {0, -2.5}}, {7, {-2, -2}},    {8, {0, 1}},      {9, {-1.5, 0.5}}, {10, {0.5, -0.5}},
      {11, {-0.5, -1.5}}, {12, {1.5, -1}},
  };
  const std::vector<std::pair<VertexId, VertexId>> edges{
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
      {2, 8}, {8, 9}, {8, 10}, {10, 11}, {10, 12},
  };
  TreeFixture out{PolygonalEmbedding(plane_graph_from_drawing(coords, edges), {0, 4},
                                     Signature::parse(std::string("a0 ~a0"))),
                  {}};
  out.forest.trees.push_back(RootedTree{2, {8, 9, 10, 11, 12}});
  return out;
}

PlaneGraph random_planar_triangulation(std::uint64_t seed, std::size_t n) {
  if (n < 3) throw Error(ErrorKind::kBadM, "a triangulation needs three vertices");
  Rng rng(seed);
  PlaneGraph g = plane_graph_from_drawing({{0, {0, 0}}, {1, {1, 2}}, {2, {2, 0}}}, {{0, 1}, {1, 2}, {2, 0}});
  while (g.vertex_count() < n) {
    const auto faces = inner_faces(g);
    stack_vertex(g, faces[pick(rng, faces.size())].front());
  }
  const std::set<EdgeId> outer_edges = [&] {
    std::set<EdgeId> s;
    for (Dart d : g.outerface()) s.insert(d.edge);
    return s;
  }();
  for (std::size_t round = 0; round < 3 * n; ++round) {
    const auto edges = g.edges();
    const Edge e = edges[pick(rng, edges.size())];
    if (outer_edges.count(e.id)) continue;
    const Dart d{e.id, 0};
    const Dart into_c = g.face_next(d);
    const Dart into_d = g.face_next(d.reversed());
    const VertexId c = g.head(into_c);
    const VertexId dd = g.head(into_d);
    if (c == dd || g.dart_between(c, dd)) continue;
    const Dart leave_c = g.face_next(into_c);
    const Dart leave_d = g.face_next(into_d);
    g.remove_edge(e.id);
    g.add_edge_in_face(leave_c, leave_d);
  }
  return g;
}

PlaneGraph octahedron() {
  const std::map<VertexId, std::pair<double, double>> coords{
      {0, {0, 0}}, {1, {6, 0}}, {2, {3, 6}}, {3, {3, 1.2}}, {4, {4.2, 3.2}}, {5, {1.8, 3.2}},
  };
  return plane_graph_from_drawing(coords, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                           {0, 3}, {0, 5}, {1, 3}, {1, 4}, {2, 4}, {2, 5}});
}

const std::vector<std::string>& kinds() {
  static const std::vector<std::string> names{"random-triangulated", "k6-torus", "sphere-outerplanar", "hanging-tree"};
  return names;
}

PolygonalEmbedding by_kind(const std::string& kind, std::uint64_t seed, std::size_t m, std::size_t n) {
  if (kind == "random-triangulated") {
    return random_triangulated(seed, {Signature::parse(std::string("a1 a2 ~a1 ~a2")), m, n});
  }
  if (kind == "k6-torus") return k6_torus();
  if (kind == "sphere-outerplanar") return sphere_outerplanar(seed, m);
  if (kind == "hanging-tree") return hanging_tree().embedding;
  throw Error(ErrorKind::kUnknownKind, "unknown fixture kind '" + kind + "'");
}

}  // namespace minoru::fixtures
