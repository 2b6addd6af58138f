#include "minoru/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>

namespace minoru {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyBranch: return "EmptyBranch";
    case ViolationKind::kOverlap: return "Overlap";
    case ViolationKind::kDisconnectedBranch: return "DisconnectedBranch";
    case ViolationKind::kMissingEdge: return "MissingEdge";
    case ViolationKind::kBorderMismatch: return "BorderMismatch";
    case ViolationKind::kSignatureMismatch: return "SignatureMismatch";
    case ViolationKind::kUnknownVertex: return "UnknownVertex";
  }
  return "Unknown";
}

namespace {

bool induces_connected(const Graph& g, const std::set<VertexId>& set) {
  if (set.empty()) return false;
  std::set<VertexId> seen{*set.begin()};
  std::deque<VertexId> queue{*set.begin()};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (set.count(y) && seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen.size() == set.size();
}

}  // namespace

std::vector<Violation> verify_witness(const Graph& minor, const Graph& major, const Witness& w) {
  std::vector<Violation> out;
  std::map<VertexId, VertexId> owner;
  for (VertexId h : minor.vertices()) {
    auto it = w.branch_sets.find(h);
    if (it == w.branch_sets.end() || it->second.empty()) {
      out.push_back({ViolationKind::kEmptyBranch, {h}});
      continue;
    }
    bool known = true;
    for (VertexId x : it->second) {
      if (!major.has_vertex(x)) {
        out.push_back({ViolationKind::kUnknownVertex, {h, x}});
        known = false;
        continue;
      }
      auto [pos, fresh] = owner.emplace(x, h);
      if (!fresh) out.push_back({ViolationKind::kOverlap, {pos->second, h, x}});
    }
    if (known && !induces_connected(major, it->second)) out.push_back({ViolationKind::kDisconnectedBranch, {h}});
  }
  std::set<std::pair<VertexId, VertexId>> realized;
  for (const Edge& e : major.edges()) {
    auto a = owner.find(e.u);
    auto b = owner.find(e.v);
    if (a != owner.end() && b != owner.end()) {
      realized.emplace(std::min(a->second, b->second), std::max(a->second, b->second));
    }
  }
  std::set<std::pair<VertexId, VertexId>> reported;
  for (const Edge& e : minor.edges()) {
    if (e.is_loop()) continue;
    const auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    if (!realized.count(key) && reported.insert(key).second) {
      out.push_back({ViolationKind::kMissingEdge, {key.first, key.second}});
    }
  }
  return out;
}

// ------------------------------------------------------------- oracle

namespace {

using Mask = std::uint32_t;

struct Search {
  std::size_t major_size = 0;
  std::vector<Mask> major_adj;             // neighbourhood per major index
  std::vector<Mask> connected;             // connected vertex subsets
  std::vector<Mask> boundary;              // neighbourhood of each subset
  std::vector<std::size_t> order;          // minor vertices in assignment order
  std::vector<std::vector<std::size_t>> minor_adj;
  std::vector<Mask> assigned;              // by minor index

  bool extend(std::size_t depth, Mask used) {
    if (depth == order.size()) return true;
    const std::size_t v = order[depth];
    const std::size_t remaining = order.size() - depth;
    if (static_cast<std::size_t>(std::popcount(static_cast<Mask>(~used) & ((Mask{1} << major_size) - 1))) < remaining) {
      return false;
    }
    for (std::size_t k = 0; k < connected.size(); ++k) {
      const Mask set = connected[k];
      if (set & used) continue;
      bool ok = true;
      std::size_t open_neighbours = 0;
      for (std::size_t u : minor_adj[v]) {
        if (assigned[u] != 0) {
          if ((boundary[k] & assigned[u]) == 0) {
            ok = false;
            break;
          }
        } else {
          ++open_neighbours;
        }
      }
      if (!ok) continue;
      if (open_neighbours > 0 && (boundary[k] & ~used & ~set) == 0) continue;
      assigned[v] = set;
      if (extend(depth + 1, used | set)) return true;
      assigned[v] = 0;
    }
    return false;
  }
};

std::optional<Witness> search_model(const Graph& minor, const Graph& major) {
  if (minor.vertex_count() > kOracleMaxMinor || major.vertex_count() > kOracleMaxMajor) {
    throw Error(ErrorKind::kTooLarge, "oracle handles at most " + std::to_string(kOracleMaxMinor) + " minor and " +
                                          std::to_string(kOracleMaxMajor) + " major vertices");
  }
  const auto hv = minor.vertices();
  const auto gv = major.vertices();
  if (hv.empty()) return Witness{};
  if (hv.size() > gv.size()) return std::nullopt;
  std::map<VertexId, std::size_t> gi;
  std::map<VertexId, std::size_t> hi;
  for (std::size_t i = 0; i < gv.size(); ++i) gi[gv[i]] = i;
  for (std::size_t i = 0; i < hv.size(); ++i) hi[hv[i]] = i;

  Search s;
  s.major_size = gv.size();
  s.major_adj.assign(gv.size(), 0);
  for (const Edge& e : major.edges()) {
    if (e.is_loop()) continue;
    s.major_adj[gi[e.u]] |= Mask{1} << gi[e.v];
    s.major_adj[gi[e.v]] |= Mask{1} << gi[e.u];
  }
  s.minor_adj.assign(hv.size(), {});
  for (const Edge& e : minor.edges()) {
    if (e.is_loop()) continue;
    auto& a = s.minor_adj[hi[e.u]];
    if (std::find(a.begin(), a.end(), hi[e.v]) == a.end()) {
      a.push_back(hi[e.v]);
      s.minor_adj[hi[e.v]].push_back(hi[e.u]);
    }
  }
  // Connected subsets, smallest first so small models are found early.
  const Mask full = (Mask{1} << gv.size()) - 1;
  for (Mask set = 1; set <= full && set != 0; ++set) {
    const Mask start = set & (~set + 1);
    Mask reach = start;
    for (Mask frontier = start; frontier != 0;) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= s.major_adj[std::countr_zero(f)];
      next &= set & ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach == set) s.connected.push_back(set);
  }
  std::stable_sort(s.connected.begin(), s.connected.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  for (Mask set : s.connected) {
    Mask nb = 0;
    for (Mask f = set; f != 0; f &= f - 1) nb |= s.major_adj[std::countr_zero(f)];
    s.boundary.push_back(nb & ~set);
  }
  // Assignment order: greedy, most already-placed neighbours first.
  std::vector<bool> placed(hv.size(), false);
  for (std::size_t step = 0; step < hv.size(); ++step) {
    std::size_t best = hv.size();
    std::pair<std::size_t, std::size_t> best_key{0, 0};
    for (std::size_t v = 0; v < hv.size(); ++v) {
      if (placed[v]) continue;
      std::size_t linked = 0;
      for (std::size_t u : s.minor_adj[v]) linked += placed[u] ? 1 : 0;
      const std::pair<std::size_t, std::size_t> key{linked, s.minor_adj[v].size()};
      if (best == hv.size() || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    placed[best] = true;
    s.order.push_back(best);
  }
  s.assigned.assign(hv.size(), 0);
  if (!s.extend(0, 0)) return std::nullopt;
  Witness w;
  for (std::size_t v = 0; v < hv.size(); ++v) {
    auto& set = w.branch_sets[hv[v]];
    for (Mask f = s.assigned[v]; f != 0; f &= f - 1) set.insert(gv[std::countr_zero(f)]);
  }
  return w;
}

}  // namespace

bool is_minor_bruteforce(const Graph& minor, const Graph& major) { return search_model(minor, major).has_value(); }

std::optional<Witness> find_minor_bruteforce(const Graph& minor, const Graph& major) {
  return search_model(minor, major);
}

bool verify_hamiltonian(const Graph& g, const std::vector<VertexId>& cycle) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || cycle.size() != n) return false;
  if (std::set<VertexId>(cycle.begin(), cycle.end()).size() != n) return false;
  for (VertexId v : cycle) {
    if (!g.has_vertex(v)) return false;
  }
  if (n == 1) return true;
  if (n == 2) {
    std::size_t links = 0;
    for (EdgeId e : g.incident(cycle[0])) links += g.edge(e).other(cycle[0]) == cycle[1] ? 1 : 0;
    return links >= 2;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

std::vector<Violation> verify_p_minor(const PolygonalEmbedding& pi, const PolygonalEmbedding& major, const Witness& w) {
  std::vector<Violation> out;
  if (pi.signature().tokens() != major.signature().tokens()) out.push_back({ViolationKind::kSignatureMismatch, {}});
  const SewnGraph small = sew(pi);
  const SewnGraph large = sew(major);
  if (pi.border().size() != major.border().size()) {
    out.push_back({ViolationKind::kBorderMismatch, {}});
  } else {
    for (std::size_t i = 0; i < pi.border().size(); ++i) {
      const VertexId h = small.projection.at(pi.border()[i]);
      const VertexId g = large.projection.at(major.border()[i]);
      auto it = w.branch_sets.find(h);
      if (it == w.branch_sets.end() || !it->second.count(g)) out.push_back({ViolationKind::kBorderMismatch, {h, g}});
    }
  }
  auto rest = verify_witness(small.graph, large.graph, w);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace minoru
