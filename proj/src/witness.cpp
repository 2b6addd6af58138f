#include "minoru/witness.hpp"

#include <string>

namespace minoru {

Witness Witness::identity(const Graph& g) {
  Witness w;
  for (VertexId v : g.vertices()) w.branch_sets[v] = {v};
  return w;
}

Witness compose_witness(const Witness& first, const Witness& second) {
  Witness out;
  for (const auto& [h, middle] : first.branch_sets) {
    std::set<VertexId>& target = out.branch_sets[h];
    for (VertexId g : middle) {
      auto it = second.branch_sets.find(g);
      if (it == second.branch_sets.end()) {
        throw Error(ErrorKind::kDomainMismatch, "vertex " + std::to_string(g) + " has no branch set downstream");
      }
      target.insert(it->second.begin(), it->second.end());
    }
  }
  return out;
}

}  // namespace minoru
