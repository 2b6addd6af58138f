#include "minoru/polygonal.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace minoru {

// ------------------------------------------------------------ Signature

Signature Signature::parse(const std::vector<std::string>& tokens) {
  std::vector<Symbol> symbols;
  for (const std::string& raw : tokens) {
    Symbol s;
    std::string token = raw;
    if (!token.empty() && token[0] == '~') {
      s.barred = true;
      token = token.substr(1);
    }
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        })) {
      throw Error(ErrorKind::kBadSignature, "bad signature token '" + raw + "'");
    }
    s.letter = token;
    symbols.push_back(std::move(s));
  }
  return Signature(std::move(symbols));
}

Signature Signature::parse(const std::string& space_separated) {
  std::istringstream in(space_separated);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return parse(tokens);
}

std::vector<std::string> Signature::tokens() const {
  std::vector<std::string> out;
  for (const Symbol& s : symbols_) out.push_back((s.barred ? "~" : "") + s.letter);
  return out;
}

std::string Signature::to_string() const {
  std::string out;
  for (const auto& t : tokens()) out += (out.empty() ? "" : " ") + t;
  return out;
}

std::vector<std::string> Signature::unpaired_letters() const {
  std::map<std::string, int> count;
  for (const Symbol& s : symbols_) ++count[s.letter];
  std::vector<std::string> out;
  for (const auto& [letter, c] : count) {
    if (c != 2) out.push_back(letter);
  }
  return out;
}

std::size_t Signature::twin_side(std::size_t i) const {
  for (std::size_t j = 0; j < symbols_.size(); ++j) {
    if (j != i && symbols_[j].letter == symbols_[i].letter) return j;
  }
  throw Error(ErrorKind::kSignatureMismatch, "letter " + symbols_[i].letter + " does not occur twice");
}

bool Signature::reversed_pair(std::size_t i) const {
  return symbols_[i].barred != symbols_[twin_side(i)].barred;
}

bool Signature::is_sphere() const {
  return symbols_.size() == 2 && symbols_[0].letter == symbols_[1].letter &&
         symbols_[0].barred != symbols_[1].barred && !symbols_[0].barred;
}

bool Signature::is_canonical_orientable() const {
  if (symbols_.empty() || symbols_.size() % 4 != 0) return false;
  for (std::size_t b = 0; b < symbols_.size(); b += 4) {
    const auto& s = symbols_;
    if (s[b].letter == s[b + 1].letter || s[b].letter != s[b + 2].letter ||
        s[b + 1].letter != s[b + 3].letter || s[b].barred || s[b + 1].barred || !s[b + 2].barred ||
        !s[b + 3].barred) {
      return false;
    }
  }
  return well_paired();
}

bool Signature::is_canonical_nonorientable() const {
  if (symbols_.empty() || symbols_.size() % 2 != 0) return false;
  for (std::size_t b = 0; b < symbols_.size(); b += 2) {
    if (symbols_[b].letter != symbols_[b + 1].letter || symbols_[b].barred || symbols_[b + 1].barred) {
      return false;
    }
  }
  return well_paired();
}

// --------------------------------------------------- PolygonalEmbedding

PolygonalEmbedding::PolygonalEmbedding(PlaneGraph graph, std::vector<VertexId> border, Signature signature)
    : graph_(std::move(graph)), border_(std::move(border)), signature_(std::move(signature)) {
  const auto& walk = graph_.outerface();
  if (border_.empty() || walk.empty()) return;
  std::vector<VertexId> verts;
  for (Dart d : walk) verts.push_back(graph_.tail(d));
  if (std::set<VertexId>(verts.begin(), verts.end()).size() != verts.size()) return;
  auto start = std::find(verts.begin(), verts.end(), border_[0]);
  if (start == verts.end()) return;
  const std::size_t offset = static_cast<std::size_t>(start - verts.begin());
  const std::size_t len = verts.size();
  const std::set<VertexId> corners(border_.begin(), border_.end());
  if (corners.size() != border_.size()) return;

  std::vector<std::vector<VertexId>> sides;
  std::vector<std::vector<EdgeId>> side_edges;
  std::size_t next_corner = 0;
  for (std::size_t k = 0; k < len; ++k) {
    const VertexId v = verts[(offset + k) % len];
    const Dart d = walk[(offset + k) % len];
    rank_[v] = k;
    if (corners.count(v)) {
      if (next_corner >= border_.size() || border_[next_corner] != v) {
        rank_.clear();
        return;
      }
      ++next_corner;
      sides.emplace_back();
      side_edges.emplace_back();
    } else {
      sides.back().push_back(v);
    }
    side_edges.back().push_back(d.edge);
  }
  if (next_corner != border_.size()) {
    rank_.clear();
    return;
  }
  sides_ = std::move(sides);
  side_edges_ = std::move(side_edges);
  sides_ok_ = true;
}

std::vector<VertexId> PolygonalEmbedding::side_path(std::size_t i) const {
  std::vector<VertexId> out;
  out.push_back(border_[i]);
  out.insert(out.end(), sides_[i].begin(), sides_[i].end());
  out.push_back(border_[(i + 1) % border_.size()]);
  return out;
}

bool PolygonalEmbedding::is_corner(VertexId v) const {
  return std::find(border_.begin(), border_.end(), v) != border_.end();
}

std::vector<VertexId> PolygonalEmbedding::internal_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : graph_.vertices()) {
    if (!on_outerface(v)) out.push_back(v);
  }
  return out;
}

std::pair<std::size_t, std::size_t> PolygonalEmbedding::side_position(VertexId v) const {
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    auto it = std::find(sides_[i].begin(), sides_[i].end(), v);
    if (it != sides_[i].end()) return {i, static_cast<std::size_t>(it - sides_[i].begin()) + 1};
  }
  throw Error(ErrorKind::kDomainMismatch, "vertex " + std::to_string(v) + " is not a side vertex");
}

std::optional<std::pair<std::size_t, std::size_t>> PolygonalEmbedding::side_edge_position(EdgeId e) const {
  for (std::size_t i = 0; i < side_edges_.size(); ++i) {
    auto it = std::find(side_edges_[i].begin(), side_edges_[i].end(), e);
    if (it != side_edges_[i].end()) return std::make_pair(i, static_cast<std::size_t>(it - side_edges_[i].begin()));
  }
  return std::nullopt;
}

EmbeddingSize PolygonalEmbedding::size() const {
  EmbeddingSize s;
  for (const auto& side : sides_) s.m = std::max(s.m, side.size());
  s.n = graph_.vertex_count() - rank_.size();
  return s;
}

// ------------------------------------------------------------- validate

std::string_view to_string(EmbeddingViolationKind kind) {
  switch (kind) {
    case EmbeddingViolationKind::kMalformedRotation: return "MalformedRotation";
    case EmbeddingViolationKind::kDisconnected: return "Disconnected";
    case EmbeddingViolationKind::kNotPlanar: return "NotPlanar";
    case EmbeddingViolationKind::kOuterfaceNotAFace: return "OuterfaceNotAFace";
    case EmbeddingViolationKind::kOuterfaceNotCycle: return "OuterfaceNotCycle";
    case EmbeddingViolationKind::kBorderNotRecoverable: return "BorderNotRecoverable";
    case EmbeddingViolationKind::kSignatureLength: return "SignatureLength";
    case EmbeddingViolationKind::kLetterCount: return "LetterCount";
    case EmbeddingViolationKind::kCornerDegree: return "CornerDegree";
    case EmbeddingViolationKind::kEmptySide: return "EmptySide";
    case EmbeddingViolationKind::kSideLengthMismatch: return "SideLengthMismatch";
  }
  return "Unknown";
}

std::vector<EmbeddingViolation> validate(const PolygonalEmbedding& p) {
  using K = EmbeddingViolationKind;
  std::vector<EmbeddingViolation> out;
  const PlaneGraph& g = p.graph();
  try {
    trace_faces(g);
  } catch (const Error& e) {
    out.push_back({K::kMalformedRotation, e.what()});
    return out;
  }
  if (!is_connected(g)) {
    out.push_back({K::kDisconnected, "polygonal embeddings must be connected"});
  } else if (const int genus = euler_characteristic_check(g); genus != 0) {
    out.push_back({K::kNotPlanar, "Euler genus " + std::to_string(genus)});
  }
  const auto& walk = g.outerface();
  if (walk.empty() || g.face_walk(walk.front()) != walk) {
    out.push_back({K::kOuterfaceNotAFace, "designated outer walk is not a traced face"});
  }
  const auto outer = g.outerface_vertices();
  if (std::set<VertexId>(outer.begin(), outer.end()).size() != outer.size() || outer.size() < 3) {
    out.push_back({K::kOuterfaceNotCycle, "outer walk repeats a vertex or is too short"});
  }
  if (p.signature().size() != p.border().size()) {
    out.push_back({K::kSignatureLength, std::to_string(p.signature().size()) + " symbols for " +
                                            std::to_string(p.border().size()) + " corners"});
  }
  for (const auto& letter : p.signature().unpaired_letters()) {
    out.push_back({K::kLetterCount, "letter " + letter + " does not occur exactly twice"});
  }
  for (VertexId c : p.border()) {
    if (g.has_vertex(c) && g.degree(c) != 2) {
      out.push_back({K::kCornerDegree, "corner " + std::to_string(c) + " has degree " + std::to_string(g.degree(c))});
    }
  }
  if (!p.sides_recovered()) {
    out.push_back({K::kBorderNotRecoverable, "border corners do not appear once each, in order, on the outer cycle"});
    return out;
  }
  for (std::size_t i = 0; i < p.sides().size(); ++i) {
    if (p.sides()[i].empty()) out.push_back({K::kEmptySide, "side " + std::to_string(i) + " is empty"});
  }
  if (p.signature().size() == p.border().size() && p.signature().well_paired()) {
    for (std::size_t i = 0; i < p.sides().size(); ++i) {
      const std::size_t j = p.signature().twin_side(i);
      if (i < j && p.sides()[i].size() != p.sides()[j].size()) {
        out.push_back({K::kSideLengthMismatch, "sides " + std::to_string(i) + " and " + std::to_string(j) +
                                                   " have " + std::to_string(p.sides()[i].size()) + " and " +
                                                   std::to_string(p.sides()[j].size()) + " vertices"});
      }
    }
  }
  return out;
}

void require_valid(const PolygonalEmbedding& p, const std::string& context) {
  const auto violations = validate(p);
  if (violations.empty()) return;
  std::string msg = context + ":";
  for (const auto& v : violations) msg += " [" + std::string(to_string(v.kind)) + "] " + v.detail + ";";
  throw Error(ErrorKind::kInvalidEmbedding, msg);
}

// ---------------------------------------------------------------- twins

VertexId twin_at(const PolygonalEmbedding& p, std::size_t side, std::size_t pos) {
  const std::size_t j = p.signature().twin_side(side);
  const std::size_t len = p.sides()[j].size();
  const std::size_t mapped = p.signature().reversed_pair(side) ? len + 1 - pos : pos;
  return p.side_path(j)[mapped];
}

VertexId twin_vertex(const PolygonalEmbedding& p, VertexId v) {
  const auto [side, pos] = p.side_position(v);
  return twin_at(p, side, pos);
}

EdgeId twin_edge(const PolygonalEmbedding& p, EdgeId e) {
  const auto where = p.side_edge_position(e);
  if (!where) throw Error(ErrorKind::kNotASideEdge, "edge " + std::to_string(e) + " is not on a side");
  const auto [side, k] = *where;
  const std::size_t j = p.signature().twin_side(side);
  const std::size_t count = p.side_edges(j).size();
  return p.side_edges(j)[p.signature().reversed_pair(side) ? count - 1 - k : k];
}

namespace {

struct UnionFind {
  std::map<std::int64_t, std::int64_t> parent;
  std::int64_t find(std::int64_t x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    const auto root = find(it->second);
    parent[x] = root;
    return root;
  }
  // The smaller id becomes the root, so roots are class minima.
  void unite(std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

void require_pairable(const PolygonalEmbedding& p) {
  if (!p.signature().well_paired()) {
    throw Error(ErrorKind::kSignatureMismatch, "letters " + p.signature().to_string() + " are not paired");
  }
  if (!p.sides_recovered() || p.sides().size() != p.signature().size()) {
    throw Error(ErrorKind::kInvalidEmbedding, "sides cannot be matched with the signature");
  }
  for (std::size_t i = 0; i < p.sides().size(); ++i) {
    if (p.sides()[i].size() != p.sides()[p.signature().twin_side(i)].size()) {
      throw Error(ErrorKind::kInvalidEmbedding, "twin sides differ in length");
    }
  }
}

}  // namespace

TwinPairing derive_twins(const PolygonalEmbedding& p) {
  require_pairable(p);
  TwinPairing out;
  UnionFind corners;
  for (VertexId c : p.border()) corners.find(c);
  for (std::size_t i = 0; i < p.sides().size(); ++i) {
    const auto path = p.side_path(i);
    for (std::size_t pos = 0; pos < path.size(); ++pos) {
      const VertexId t = twin_at(p, i, pos);
      if (pos == 0 || pos + 1 == path.size()) {
        corners.unite(path[pos], t);
      } else {
        out.vertex_twins[path[pos]] = t;
      }
    }
    for (EdgeId e : p.side_edges(i)) out.edge_twins[e] = twin_edge(p, e);
  }
  std::map<VertexId, std::vector<VertexId>> classes;
  for (VertexId c : p.border()) classes[corners.find(c)].push_back(c);
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    out.corner_classes.push_back(members);
  }
  return out;
}

SewnGraph sew(const PolygonalEmbedding& p) {
  require_pairable(p);
  const PlaneGraph& g = p.graph();
  UnionFind vclass;
  UnionFind eclass;
  for (VertexId v : g.vertices()) vclass.find(v);
  for (const Edge& e : g.edges()) eclass.find(e.id);
  for (std::size_t i = 0; i < p.sides().size(); ++i) {
    const auto path = p.side_path(i);
    for (std::size_t pos = 0; pos < path.size(); ++pos) vclass.unite(path[pos], twin_at(p, i, pos));
    for (EdgeId e : p.side_edges(i)) eclass.unite(e, twin_edge(p, e));
  }
  SewnGraph out;
  for (VertexId v : g.vertices()) {
    out.projection[v] = vclass.find(v);
    out.graph.add_vertex(out.projection[v]);
  }
  for (const Edge& e : g.edges()) {
    const EdgeId rep = eclass.find(e.id);
    out.edge_projection[e.id] = rep;
    if (rep != e.id) continue;
    const Edge sewn{rep, out.projection[e.u], out.projection[e.v]};
    out.graph.add_edge(sewn);
    if (sewn.is_loop()) out.loops.push_back(rep);
  }
  const auto faces = trace_faces(g);
  const Dart outer = g.outerface().empty() ? Dart{-1, 0} : g.outerface().front();
  for (const auto& face : faces.faces) {
    if (std::find(face.begin(), face.end(), outer) != face.end()) continue;
    std::vector<VertexId> cycle;
    for (Dart d : face) cycle.push_back(out.projection[g.tail(d)]);
    out.faces.push_back(std::move(cycle));
  }
  return out;
}

int sewn_genus(const PolygonalEmbedding& p) {
  const SewnGraph s = sew(p);
  return 2 - static_cast<int>(s.graph.vertex_count()) + static_cast<int>(s.graph.edge_count()) -
         static_cast<int>(s.faces.size());
}

TwinSubdivision subdivide_twin_edge(const PolygonalEmbedding& p, EdgeId e) {
  const auto where = p.side_edge_position(e);
  if (!where) throw Error(ErrorKind::kNotASideEdge, "edge " + std::to_string(e) + " is not on a side");
  const auto [side, k] = *where;
  const EdgeId twin = twin_edge(p, e);
  // Endpoint at path position k of side `side` and its twin.
  const VertexId near = p.side_path(side)[k];
  const VertexId near_twin = twin_at(p, side, k);

  // The new halves sit at the near ends and are contracted back into them;
  // their ids are never reused by a later subdivision.
  PlaneGraph g = p.graph();
  const auto [s1, fresh1] = g.subdivide(e, near);
  const auto [s2, fresh2] = g.subdivide(twin, near_twin);
  TwinSubdivision out;
  out.steps.push_back(MinorStep::contract(fresh1, near, "subdivide"));
  out.steps.push_back(MinorStep::contract(fresh2, near_twin, "subdivide"));
  out.embedding = PolygonalEmbedding(std::move(g), p.border(), p.signature());
  out.on_edge = s1;
  out.on_twin = s2;
  return out;
}

}  // namespace minoru
