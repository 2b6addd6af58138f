#pragma once

#include <string>
#include <vector>

#include "minoru/graph.hpp"
#include "minoru/polygonal.hpp"
#include "minoru/witness.hpp"

namespace minoru {

enum class ViolationKind {
  kEmptyBranch,
  kOverlap,
  kDisconnectedBranch,
  kMissingEdge,
  kBorderMismatch,
  kSignatureMismatch,
  kUnknownVertex,  // branch set names a vertex absent from the major
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> ids;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every violated witness condition, in a deterministic order; empty means
// `w` is a minor model of `minor` in `major`.
std::vector<Violation> verify_witness(const Graph& minor, const Graph& major, const Witness& w);

inline constexpr std::size_t kOracleMaxMinor = 7;
inline constexpr std::size_t kOracleMaxMajor = 14;

// Exhaustive search for a minor model. Throws kTooLarge beyond the caps.
bool is_minor_bruteforce(const Graph& minor, const Graph& major);
// The model found by the same search, if any.
std::optional<Witness> find_minor_bruteforce(const Graph& minor, const Graph& major);

bool verify_hamiltonian(const Graph& g, const std::vector<VertexId>& cycle);

// Signatures equal token-wise, border corners map into the branch sets of
// the corresponding corners, and `w` models sew(pi) in sew(major).
std::vector<Violation> verify_p_minor(const PolygonalEmbedding& pi, const PolygonalEmbedding& major, const Witness& w);

}  // namespace minoru
