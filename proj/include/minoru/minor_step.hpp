#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "minoru/graph.hpp"

namespace minoru {

enum class StepKind { kContractEdge, kDeleteEdge, kDeleteVertex };

std::string_view to_string(StepKind kind);

// One elementary minor operation. Replaying a stage's steps on its output
// graph recovers the stage input (up to edge_sets_equal).
struct MinorStep {
  StepKind kind = StepKind::kContractEdge;
  EdgeId edge = -1;      // contract / delete-edge
  VertexId vertex = -1;  // survivor of a contraction, or the deleted vertex
  std::string stage;

  static MinorStep contract(EdgeId e, VertexId keep, std::string stage) {
    return {StepKind::kContractEdge, e, keep, std::move(stage)};
  }
  static MinorStep delete_edge(EdgeId e, std::string stage) {
    return {StepKind::kDeleteEdge, e, -1, std::move(stage)};
  }
  static MinorStep delete_vertex(VertexId v, std::string stage) {
    return {StepKind::kDeleteVertex, -1, v, std::move(stage)};
  }
};

Graph replay(Graph g, std::span<const MinorStep> steps);

// Branch sets induced by the contractions: each surviving vertex maps to the
// output vertices merged into it. Deleted vertices are dropped.
std::map<VertexId, std::set<VertexId>> branch_sets_from_steps(const Graph& output,
                                                              std::span<const MinorStep> steps);

}  // namespace minoru
