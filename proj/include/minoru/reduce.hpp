#pragma once

#include <map>
#include <optional>
#include <vector>

#include "minoru/minor_step.hpp"
#include "minoru/polygonal.hpp"
#include "minoru/witness.hpp"

namespace minoru {

// A plane major together with the steps that undo it.
struct StageOutput {
  PolygonalEmbedding embedding;
  std::vector<MinorStep> steps;
};

// Joins the two outer neighbours of every corner whose inner face is not
// already a triangle.
StageOutput guard_corners(const PolygonalEmbedding& p);
// Triangulates every inner face; corners keep degree two.
StageOutput triangulate_inner(const PolygonalEmbedding& p);

struct RootedTree {
  VertexId root = -1;
  std::vector<EdgeId> edges;
};

struct RootedForest {
  std::vector<RootedTree> trees;
  std::size_t edge_count() const;
};

RootedForest spanning_forest(const PolygonalEmbedding& p);
// Same, for any connected plane graph; trees hang from outer-face vertices.
RootedForest spanning_forest(const PlaneGraph& g);

// The cycle replacing one tree. Position 0 is the anchor; cycle_edges[i]
// joins cycle[i] and cycle[i+1 mod |cycle|].
struct BlownCycle {
  VertexId anchor = -1;
  std::vector<VertexId> cycle;
  std::vector<EdgeId> cycle_edges;
  std::vector<EdgeId> extra_edges;
  std::vector<EdgeId> upward_edges;
};

struct BlowupRecord {
  std::vector<BlownCycle> cycles;
};

struct BlowupResult {
  PolygonalEmbedding embedding;
  BlowupRecord record;
  std::vector<MinorStep> steps;
};

BlowupResult blow_up(const PolygonalEmbedding& p, const RootedForest& forest);

struct AnchorFrame {
  VertexId u = -1;
  VertexId w1 = -1;
  VertexId w2 = -1;
  VertexId v = -1;
};

struct AnchorSplit {
  VertexId first = -1;   // keeps the anchor's id
  VertexId second = -1;  // new vertex
  EdgeId edge_anchor = -1;
  std::vector<VertexId> path;        // first, ..., second along the old cycle
  std::vector<EdgeId> inside_edges;  // chords of the cycle
  AnchorFrame frame;
};

struct SplitResult {
  PlaneGraph graph;
  std::vector<AnchorSplit> splits;
  std::vector<MinorStep> steps;
  std::vector<VertexId> hamiltonian_cycle;
};

SplitResult split_anchors(const PlaneGraph& blown, const BlowupRecord& record);

// Rank of outer vertices counted clockwise from border[0].
struct TwinOrder {
  std::map<VertexId, std::size_t> rank;
  bool precedes(VertexId a, VertexId b) const { return rank.at(a) < rank.at(b); }
};

TwinOrder twin_order(const PolygonalEmbedding& p);

struct TwinSplitResult {
  PolygonalEmbedding embedding;
  std::vector<AnchorSplit> splits;
  std::vector<MinorStep> steps;
};

TwinSplitResult twin_split_all(const PolygonalEmbedding& blown, const BlowupRecord& record);

// Moves every split cycle across the gluing. The plane graphs are not minors
// of each other, so the step list is empty; the sewings coincide.
StageOutput swap_all(const PolygonalEmbedding& split, const std::vector<AnchorSplit>& splits);

// Sewn witness of sew(input) in sew(output) induced by plane minor steps.
Witness lift_witness(const PolygonalEmbedding& input, const PolygonalEmbedding& output,
                     const std::vector<MinorStep>& steps);

struct OuterplanarResult {
  PolygonalEmbedding guarded;
  PolygonalEmbedding triangulated;
  RootedForest forest;
  BlowupResult blown;
  TwinSplitResult split;
  PolygonalEmbedding result;
  Witness witness;  // sew(input) in sew(result)
  std::vector<MinorStep> trace;
};

OuterplanarResult outerplanarize(const PolygonalEmbedding& p);

struct HamiltonianMajor {
  PlaneGraph graph;
  std::vector<VertexId> cycle;
  std::vector<MinorStep> steps;
};

// `circuit` is a vertex, an edge (two vertices) or a cycle of g, given in
// order. Throws kTooSmallCircuit, kSeparatingCircuit.
HamiltonianMajor hamiltonian_major(const PlaneGraph& g, const std::vector<VertexId>& circuit);
// Picks a non-separating circuit (a face when possible) and runs the above.
HamiltonianMajor hamiltonian_major(const PlaneGraph& g);

}  // namespace minoru
