#pragma once

#include <cstddef>
#include <vector>

#include "minoru/polygonal.hpp"
#include "minoru/reduce.hpp"
#include "minoru/universal.hpp"
#include "minoru/witness.hpp"

namespace minoru {

// Subdivides twin side edges until every side has exactly `m` non-corner
// vertices. Throws kSideTooLong when a side is already longer.
StageOutput pad_sides(const PolygonalEmbedding& p, std::size_t m);

// Non-corner outer vertices v_0..v_{N-1} clockwise from border[0], and for
// each the index interval [low, high] covering it and its non-corner
// neighbours, except that high[0] is forced to N.
struct NeighborSpan {
  std::vector<VertexId> order;
  std::vector<std::size_t> low;
  std::vector<std::size_t> high;

  std::size_t size() const { return order.size(); }
};

// Throws kNotOuterplanar when p has internal vertices.
NeighborSpan neighbor_span(const PolygonalEmbedding& p);

// Branch sets of p's vertices in the universal polygon `u`: corners go to
// the matching corner, v_i to the row and column pieces through (i,i).
// Expects padded sides and triangulated inner faces with corners of degree
// two; throws kSpanViolation when an edge of p is not realized.
Witness staircase_witness(const PolygonalEmbedding& p, const UniversalEmbedding& u);

// Witness between sewings induced by a witness between the polygons.
Witness sew_witness(const PolygonalEmbedding& minor, const PolygonalEmbedding& major, const Witness& plane);

struct EmbedResult {
  OuterplanarResult reduction;
  PolygonalEmbedding padded;  // padded and triangulated outerplanar polygon
  UniversalEmbedding universal;
  Witness plane_witness;  // padded polygon in the universal polygon
  Witness witness;        // sew(input) in sew(universal)
};

// Full chain from a polygonal embedding of size (m,n) into the universal
// polygon of parameter m + 2n. The final witness is checked before return.
EmbedResult universal_embed(const PolygonalEmbedding& p);
// Same, continuing from an existing reduction of p.
EmbedResult universal_embed(const PolygonalEmbedding& p, OuterplanarResult reduction);

}  // namespace minoru
