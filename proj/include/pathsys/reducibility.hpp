#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathsys/path_system.hpp"

namespace pathsys {

/// Bipartition (A, B) such that P_{u,v} stays inside A for u, v in A, and
/// inside B for u, v in B.
struct Reduction {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

struct ReductionCheck {
  bool valid = false;
  /// First same-side pair, in canonical order, whose path leaves its side.
  std::optional<std::pair<Vertex, Vertex>> violating_pair;
  std::string reason;
};

ReductionCheck verify_reduction(const PathSystem& ps, const std::vector<Vertex>& a, const std::vector<Vertex>& b);

struct Propagation {
  bool conflict = false;
  /// A vertex forced onto both sides.
  std::optional<Vertex> conflict_vertex;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Vertex> undecided;
};

/// Closes A and B under "u, v on one side puts all of P_{u,v} there".
/// Throws InputError when the inputs overlap.
Propagation closure_propagate(const PathSystem& ps, const std::vector<Vertex>& a, const std::vector<Vertex>& b);

struct SearchOptions {
  /// Maximum number of search nodes before giving up.
  std::uint64_t budget = 100'000'000;
  /// Pin the smallest vertex to B instead of A and branch B-first.
  bool swap_roles = false;
};

struct SearchResult {
  std::optional<Reduction> reduction;
  /// Search nodes visited; for a certified none this is the size of the
  /// exhausted search tree.
  std::uint64_t branches = 0;
  bool budget_exhausted = false;

  bool certified_none() const { return !reduction && !budget_exhausted; }
};

/// Exhaustive search for a reduction. The smallest vertex is pinned to one
/// side; for each choice of seed on the other side (earlier seeds forced to
/// the pinned side, as those partitions were already covered) propagation is
/// interleaved with branching on the smallest undecided vertex.
SearchResult find_reduction(const PathSystem& ps, const SearchOptions& options = {});

}  // namespace pathsys
