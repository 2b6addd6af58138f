#pragma once

#include <vector>

#include "minoru/reduce.hpp"

namespace minoru::detail {

struct OuterNeighbours {
  VertexId pred = -1;
  VertexId succ = -1;
  Dart to_pred;
  Dart to_succ;
};

OuterNeighbours outer_neighbours(const PlaneGraph& g, VertexId x);
// One starting dart per face other than the designated outer face.
std::vector<Dart> inner_face_darts(const PlaneGraph& g);

// Blows up every tree of `forest` inside `g`, appending the undo steps.
BlowupRecord blow_up_in_place(PlaneGraph& g, const RootedForest& forest, std::vector<MinorStep>& steps);

// Replaces the anchor of `cycle` by an edge-anchor in place; the outer walk
// is updated. Undo steps are appended to `steps`.
AnchorSplit split_anchor(PlaneGraph& g, const BlownCycle& cycle, const std::string& stage,
                         std::vector<MinorStep>& steps);

// Outer cycle with every edge-anchor replaced by its path.
std::vector<VertexId> hamiltonian_through(const PlaneGraph& g, const std::vector<AnchorSplit>& splits);

}  // namespace minoru::detail
