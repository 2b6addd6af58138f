#pragma once

#include <map>
#include <set>

#include "minoru/graph.hpp"

namespace minoru {

// Minor model: each minor vertex owns a branch set of major vertices.
struct Witness {
  std::map<VertexId, std::set<VertexId>> branch_sets;

  static Witness identity(const Graph& g);
  friend bool operator==(const Witness&, const Witness&) = default;
};

// W(h) is the union of W2(g) over g in W1(h). Throws kDomainMismatch when a
// vertex of W1's image has no branch set in W2.
Witness compose_witness(const Witness& first, const Witness& second);

}  // namespace minoru
