#pragma once

#include <cstdint>
#include <vector>

#include "minoru/io.hpp"
#include "minoru/polygonal.hpp"

namespace minoru {

// The half-grid polygon: vertices (i,j) with 0 <= j <= i < |sigma|*m, the
// diagonal plus the corners forming the outer cycle.
struct UniversalEmbedding {
  PolygonalEmbedding base;
  io::GridCoords coords;  // grid vertex -> (i, j)
  std::vector<VertexId> corner_ids;
  std::int64_t dimension = 0;

  VertexId grid_vertex(std::int64_t i, std::int64_t j) const { return i * (i + 1) / 2 + j; }
};

struct UniversalCounts {
  std::int64_t internal = 0;
  std::int64_t per_side = 0;
  std::int64_t sewn_upper = 0;
  friend bool operator==(const UniversalCounts&, const UniversalCounts&) = default;
};

// Throws kBadSignature (fewer than two sides or unpaired letters) or kBadM.
UniversalEmbedding build_universal(const Signature& sigma, std::int64_t m);
UniversalCounts universal_counts(const Signature& sigma, std::int64_t m);
// Exact vertex count of the sewing for canonical signatures.
std::int64_t canonical_sewn_count(const Signature& sigma, std::int64_t m);

}  // namespace minoru
