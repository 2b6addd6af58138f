#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minoru/graph.hpp"
#include "minoru/minor_step.hpp"

namespace minoru {

struct Symbol {
  std::string letter;
  bool barred = false;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Clockwise word over (possibly barred) letters, one symbol per polygon side.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  // Tokens look like "a1" or "~a1" (barred).
  static Signature parse(const std::vector<std::string>& tokens);
  static Signature parse(const std::string& space_separated);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  std::vector<std::string> tokens() const;
  std::string to_string() const;

  // Letters that do not occur exactly twice.
  std::vector<std::string> unpaired_letters() const;
  bool well_paired() const { return unpaired_letters().empty(); }
  // Index of the other side carrying the same letter; throws kSignatureMismatch.
  std::size_t twin_side(std::size_t i) const;
  // Twin sides are glued in reverse order when exactly one of them is barred.
  bool reversed_pair(std::size_t i) const;

  bool is_sphere() const;
  bool is_canonical_orientable() const;
  bool is_canonical_nonorientable() const;
  bool is_canonical() const { return is_sphere() || is_canonical_orientable() || is_canonical_nonorientable(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
};

struct EmbeddingSize {
  std::size_t m = 0;  // longest side, corners excluded
  std::size_t n = 0;  // internal vertices
  friend bool operator==(const EmbeddingSize&, const EmbeddingSize&) = default;
};

// A plane graph whose outer face is a cycle cut into clockwise sides by the
// corners of the border; side i runs from border[i] to border[i+1].
class PolygonalEmbedding {
 public:
  PolygonalEmbedding() = default;
  // Sides are recovered from the outer walk; `sides_recovered()` is false
  // when the border cannot be located on it in order.
  PolygonalEmbedding(PlaneGraph graph, std::vector<VertexId> border, Signature signature);

  const PlaneGraph& graph() const { return graph_; }
  const std::vector<VertexId>& border() const { return border_; }
  const Signature& signature() const { return signature_; }
  bool sides_recovered() const { return sides_ok_; }
  // Non-corner vertices of each side in clockwise order.
  const std::vector<std::vector<VertexId>>& sides() const { return sides_; }
  // Full side path border[i], ..., border[i+1].
  std::vector<VertexId> side_path(std::size_t i) const;
  // Edges of side i in clockwise order (|side| + 1 of them).
  const std::vector<EdgeId>& side_edges(std::size_t i) const { return side_edges_[i]; }

  bool is_corner(VertexId v) const;
  bool on_outerface(VertexId v) const { return rank_.count(v) != 0; }
  // Position on the outer cycle counted from border[0].
  std::size_t rank(VertexId v) const { return rank_.at(v); }
  std::vector<VertexId> internal_vertices() const;
  // (side index, 1-based position) of a non-corner outer vertex.
  std::pair<std::size_t, std::size_t> side_position(VertexId v) const;
  // Side index and 0-based position of a side edge, if it is one.
  std::optional<std::pair<std::size_t, std::size_t>> side_edge_position(EdgeId e) const;
  EmbeddingSize size() const;

 private:
  PlaneGraph graph_;
  std::vector<VertexId> border_;
  Signature signature_;
  bool sides_ok_ = false;
  std::vector<std::vector<VertexId>> sides_;
  std::vector<std::vector<EdgeId>> side_edges_;
  std::map<VertexId, std::size_t> rank_;
};

enum class EmbeddingViolationKind {
  kMalformedRotation,
  kDisconnected,
  kNotPlanar,
  kOuterfaceNotAFace,
  kOuterfaceNotCycle,
  kBorderNotRecoverable,
  kSignatureLength,
  kLetterCount,
  kCornerDegree,
  kEmptySide,
  kSideLengthMismatch,
};

std::string_view to_string(EmbeddingViolationKind kind);

struct EmbeddingViolation {
  EmbeddingViolationKind kind;
  std::string detail;
};

std::vector<EmbeddingViolation> validate(const PolygonalEmbedding& p);
// Throws kInvalidEmbedding listing every violation.
void require_valid(const PolygonalEmbedding& p, const std::string& context);

struct TwinPairing {
  std::map<VertexId, VertexId> vertex_twins;  // non-corner side vertices
  std::vector<std::vector<VertexId>> corner_classes;
  std::map<EdgeId, EdgeId> edge_twins;
};

// Vertex or corner sitting at 0-based path position `pos` (0 = border[i],
// |side|+1 = border[i+1]) of the twin of side i.
VertexId twin_at(const PolygonalEmbedding& p, std::size_t side, std::size_t pos);
// Twin of a non-corner side vertex.
VertexId twin_vertex(const PolygonalEmbedding& p, VertexId v);
EdgeId twin_edge(const PolygonalEmbedding& p, EdgeId e);

TwinPairing derive_twins(const PolygonalEmbedding& p);

struct SewnGraph {
  Graph graph;
  std::map<VertexId, VertexId> projection;   // polygonal vertex -> sewn vertex
  std::map<EdgeId, EdgeId> edge_projection;  // polygonal edge -> sewn edge
  std::vector<EdgeId> loops;                 // sewn edges whose ends were glued together
  // Faces of the glued surface as vertex cycles; they are the inner faces of
  // the polygon, since every side dart continues on its twin.
  std::vector<std::vector<VertexId>> faces;
};

// Sewn vertices/edges are named by the smallest id of their class.
SewnGraph sew(const PolygonalEmbedding& p);
int sewn_genus(const PolygonalEmbedding& p);

struct TwinSubdivision {
  PolygonalEmbedding embedding;
  VertexId on_edge = -1;  // new vertex on the given edge
  VertexId on_twin = -1;  // new vertex on its twin
  std::vector<MinorStep> steps;
};

TwinSubdivision subdivide_twin_edge(const PolygonalEmbedding& p, EdgeId e);

}  // namespace minoru
