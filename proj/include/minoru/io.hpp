#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "minoru/minor_step.hpp"
#include "minoru/polygonal.hpp"
#include "minoru/witness.hpp"

namespace minoru::io {

using Json = nlohmann::ordered_json;
inline constexpr int kFormat = 1;

using GridCoords = std::map<VertexId, std::pair<std::int64_t, std::int64_t>>;

Json to_json(const PlaneGraph& g);
Json to_json(const Graph& g);
Json to_json(const PolygonalEmbedding& p, const GridCoords* coords = nullptr);
Json to_json(const Witness& w);
Json to_json(const std::vector<MinorStep>& steps);

PlaneGraph plane_graph_from_json(const Json& j);
Graph graph_from_json(const Json& j);
PolygonalEmbedding polygonal_from_json(const Json& j);
GridCoords coords_from_json(const Json& j);
Witness witness_from_json(const Json& j);
std::vector<MinorStep> steps_from_json(const Json& j);

bool is_polygonal(const Json& j);

// Throws kParse with the parser's byte/line position on malformed text.
Json parse_text(const std::string& text, const std::string& origin);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace minoru::io
