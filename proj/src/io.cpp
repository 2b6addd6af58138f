#include "minoru/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace minoru::io {

namespace {

void require_format(const Json& j, const char* what) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, std::string(what) + ": expected a JSON object");
  if (!j.contains("format") || j.at("format") != kFormat) {
    throw Error(ErrorKind::kParse, std::string(what) + ": missing or unsupported \"format\" (expected 1)");
  }
}

template <typename T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw Error(ErrorKind::kParse, std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string(what) + ": field \"" + key + "\": " + e.what());
  }
}

Json edges_array(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.id, e.u, e.v});
  return out;
}

Json darts_array(const std::vector<Dart>& darts) {
  Json out = Json::array();
  for (Dart d : darts) out.push_back(to_token(d));
  return out;
}

std::vector<Dart> darts_from(const Json& tokens, const char* what) {
  std::vector<Dart> out;
  for (const auto& t : tokens) {
    if (!t.is_string()) throw Error(ErrorKind::kParse, std::string(what) + ": edge-end tokens must be strings");
    out.push_back(dart_from_token(t.get<std::string>()));
  }
  return out;
}

VertexId parse_key(const std::string& key, const char* what) {
  try {
    std::size_t used = 0;
    const VertexId v = std::stoll(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParse, std::string(what) + ": vertex key '" + key + "' is not an integer");
  }
}

}  // namespace

Json to_json(const PlaneGraph& g) {
  Json j;
  j["format"] = kFormat;
  j["vertices"] = g.vertices();
  j["edges"] = edges_array(g.edges());
  Json rotation = Json::object();
  for (VertexId v : g.vertices()) rotation[std::to_string(v)] = darts_array(g.rotation(v));
  j["rotation"] = std::move(rotation);
  j["outerface"] = darts_array(g.outerface());
  return j;
}

Json to_json(const Graph& g) {
  Json j;
  j["format"] = kFormat;
  j["vertices"] = g.vertices();
  j["edges"] = edges_array(g.edges());
  return j;
}

Json to_json(const PolygonalEmbedding& p, const GridCoords* coords) {
  Json j = to_json(p.graph());
  j["border"] = p.border();
  j["signature"] = p.signature().tokens();
  if (coords != nullptr) {
    Json c = Json::object();
    for (const auto& [v, ij] : *coords) c[std::to_string(v)] = {ij.first, ij.second};
    j["coords"] = std::move(c);
  }
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["format"] = kFormat;
  Json sets = Json::object();
  for (const auto& [h, set] : w.branch_sets) sets[std::to_string(h)] = std::vector<VertexId>(set.begin(), set.end());
  j["branch_sets"] = std::move(sets);
  return j;
}

Json to_json(const std::vector<MinorStep>& steps) {
  Json j;
  j["format"] = kFormat;
  Json arr = Json::array();
  for (const MinorStep& s : steps) {
    Json step;
    step["kind"] = std::string(to_string(s.kind));
    if (s.kind != StepKind::kDeleteVertex) step["edge"] = s.edge;
    if (s.kind != StepKind::kDeleteEdge) step["vertex"] = s.vertex;
    step["stage"] = s.stage;
    arr.push_back(std::move(step));
  }
  j["steps"] = std::move(arr);
  return j;
}

PlaneGraph plane_graph_from_json(const Json& j) {
  constexpr const char* what = "plane graph";
  require_format(j, what);
  PlaneGraph g;
  for (VertexId v : field<std::vector<VertexId>>(j, "vertices", what)) g.add_vertex(v);
  for (const auto& e : field<std::vector<std::vector<std::int64_t>>>(j, "edges", what)) {
    if (e.size() != 3) throw Error(ErrorKind::kParse, "plane graph: edges are [id, u, v] triples");
    g.add_edge_with_id(e[0], e[1], e[2]);
  }
  const Json rotation = field<Json>(j, "rotation", what);
  if (!rotation.is_object()) throw Error(ErrorKind::kParse, "plane graph: \"rotation\" must be an object");
  for (const auto& [key, tokens] : rotation.items()) {
    const VertexId v = parse_key(key, what);
    if (!g.has_vertex(v)) throw Error(ErrorKind::kParse, "plane graph: rotation for unknown vertex " + key);
    g.set_rotation(v, darts_from(tokens, what));
  }
  g.set_outerface(darts_from(field<Json>(j, "outerface", what), what));
  return g;
}

Graph graph_from_json(const Json& j) {
  constexpr const char* what = "graph";
  require_format(j, what);
  Graph g;
  for (VertexId v : field<std::vector<VertexId>>(j, "vertices", what)) g.add_vertex(v);
  for (const auto& e : field<std::vector<std::vector<std::int64_t>>>(j, "edges", what)) {
    if (e.size() != 3) throw Error(ErrorKind::kParse, "graph: edges are [id, u, v] triples");
    if (!g.has_vertex(e[1]) || !g.has_vertex(e[2])) {
      throw Error(ErrorKind::kParse, "graph: edge " + std::to_string(e[0]) + " has unknown endpoint");
    }
    g.add_edge(Edge{e[0], e[1], e[2]});
  }
  return g;
}

PolygonalEmbedding polygonal_from_json(const Json& j) {
  constexpr const char* what = "polygonal embedding";
  PlaneGraph g = plane_graph_from_json(j);
  auto border = field<std::vector<VertexId>>(j, "border", what);
  auto signature = Signature::parse(field<std::vector<std::string>>(j, "signature", what));
  return PolygonalEmbedding(std::move(g), std::move(border), std::move(signature));
}

GridCoords coords_from_json(const Json& j) {
  GridCoords out;
  if (!j.contains("coords")) return out;
  for (const auto& [key, ij] : j.at("coords").items()) {
    const auto pair = ij.get<std::vector<std::int64_t>>();
    if (pair.size() != 2) throw Error(ErrorKind::kParse, "coords: expected [i, j] pairs");
    out[parse_key(key, "coords")] = {pair[0], pair[1]};
  }
  return out;
}

Witness witness_from_json(const Json& j) {
  constexpr const char* what = "witness";
  require_format(j, what);
  const Json sets = field<Json>(j, "branch_sets", what);
  if (!sets.is_object()) throw Error(ErrorKind::kParse, "witness: \"branch_sets\" must be an object");
  Witness w;
  for (const auto& [key, members] : sets.items()) {
    const auto list = members.get<std::vector<VertexId>>();
    w.branch_sets[parse_key(key, what)] = std::set<VertexId>(list.begin(), list.end());
  }
  return w;
}

std::vector<MinorStep> steps_from_json(const Json& j) {
  constexpr const char* what = "minor steps";
  require_format(j, what);
  std::vector<MinorStep> out;
  for (const auto& s : field<Json>(j, "steps", what)) {
    const auto kind = field<std::string>(s, "kind", what);
    const auto stage = field<std::string>(s, "stage", what);
    if (kind == "contract-edge") {
      out.push_back(MinorStep::contract(field<EdgeId>(s, "edge", what), field<VertexId>(s, "vertex", what), stage));
    } else if (kind == "delete-edge") {
      out.push_back(MinorStep::delete_edge(field<EdgeId>(s, "edge", what), stage));
    } else if (kind == "delete-vertex") {
      out.push_back(MinorStep::delete_vertex(field<VertexId>(s, "vertex", what), stage));
    } else {
      throw Error(ErrorKind::kParse, "minor steps: unknown kind '" + kind + "'");
    }
  }
  return out;
}

bool is_polygonal(const Json& j) { return j.is_object() && j.contains("border") && j.contains("signature"); }

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Convert the byte offset into a line number for the diagnostic.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw Error(ErrorKind::kParse, origin + ":" + std::to_string(line) + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParse, "cannot write " + path);
  out << dump(j);
}

}  // namespace minoru::io
