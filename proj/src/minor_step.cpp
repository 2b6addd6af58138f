#include "minoru/minor_step.hpp"

namespace minoru {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kContractEdge: return "contract-edge";
    case StepKind::kDeleteEdge: return "delete-edge";
    case StepKind::kDeleteVertex: return "delete-vertex";
  }
  return "unknown";
}

Graph replay(Graph g, std::span<const MinorStep> steps) {
  for (const MinorStep& step : steps) {
    switch (step.kind) {
      case StepKind::kContractEdge: {
        const Edge e = g.edge(step.edge);
        if (e.u != step.vertex && e.v != step.vertex) {
          throw Error(ErrorKind::kDomainMismatch, "contraction keeps a non-endpoint");
        }
        g.remove_edge(e.id);
        g.merge_vertices(step.vertex, e.other(step.vertex));
        break;
      }
      case StepKind::kDeleteEdge:
        g.remove_edge(step.edge);
        break;
      case StepKind::kDeleteVertex:
        g.remove_vertex(step.vertex);
        break;
    }
  }
  return g;
}

std::map<VertexId, std::set<VertexId>> branch_sets_from_steps(const Graph& output,
                                                              std::span<const MinorStep> steps) {
  std::map<VertexId, std::set<VertexId>> sets;
  for (VertexId v : output.vertices()) sets[v] = {v};
  Graph g = output;
  for (const MinorStep& step : steps) {
    switch (step.kind) {
      case StepKind::kContractEdge: {
        const Edge e = g.edge(step.edge);
        const VertexId gone = e.other(step.vertex);
        g.remove_edge(e.id);
        g.merge_vertices(step.vertex, gone);
        if (gone != step.vertex) {
          sets[step.vertex].insert(sets[gone].begin(), sets[gone].end());
          sets.erase(gone);
        }
        break;
      }
      case StepKind::kDeleteEdge:
        g.remove_edge(step.edge);
        break;
      case StepKind::kDeleteVertex:
        g.remove_vertex(step.vertex);
        sets.erase(step.vertex);
        break;
    }
  }
  return sets;
}

}  // namespace minoru
