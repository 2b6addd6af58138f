#pragma once

#include <string>

#include "minoru/io.hpp"
#include "minoru/polygonal.hpp"
#include "minoru/witness.hpp"

namespace minoru {

// Undirected DOT graph. With a witness, each branch set becomes a filled
// cluster named after its minor vertex.
std::string to_dot(const Graph& g, const Witness* witness = nullptr);

// Polygon drawing: with grid coordinates the universal half-grid is drawn
// as is; otherwise corners sit on a regular polygon, side vertices along its
// edges and internal vertices at barycentres of their neighbours.
std::string to_svg(const PolygonalEmbedding& p, const io::GridCoords* coords = nullptr);

}  // namespace minoru
