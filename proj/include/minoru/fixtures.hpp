#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minoru/polygonal.hpp"
#include "minoru/reduce.hpp"

namespace minoru::fixtures {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Seed from MINOR_UNIVERSAL_SEED when set, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

struct RandomSpec {
  Signature signature;
  std::size_t max_side = 3;      // sides get 1..max_side vertices
  std::size_t internal = 4;      // internal vertices
};

// Inner-triangulated polygonal embedding with corners of degree two.
PolygonalEmbedding random_triangulated(std::uint64_t seed, const RandomSpec& spec);
// Triangulated polygon with no internal vertex, sphere signature.
PolygonalEmbedding sphere_outerplanar(std::uint64_t seed, std::size_t side_length);
// K6 drawn in a rectangle whose sides glue into a torus.
PolygonalEmbedding k6_torus();
// Two-sided polygon with one interior tree hanging from a side vertex.
struct TreeFixture {
  PolygonalEmbedding embedding;
  RootedForest forest;
};
TreeFixture hanging_tree();

// Random triangulation of the sphere with `n` >= 3 vertices.
PlaneGraph random_planar_triangulation(std::uint64_t seed, std::size_t n);
PlaneGraph octahedron();

// Drives gen-fixture; `kind` is one of the names above (with dashes).
PolygonalEmbedding by_kind(const std::string& kind, std::uint64_t seed, std::size_t m, std::size_t n);
const std::vector<std::string>& kinds();

}  // namespace minoru::fixtures
