#pragma once

// Empirical checks of the character-sum and residue-pattern bounds that the
// Paley construction leans on.

#include <cstdint>
#include <optional>

#include "pathsys/numtheory.hpp"

namespace pathsys {

struct BurgessStats {
  std::uint64_t tuples = 0;
  std::uint64_t violations = 0;
  /// max |S| / ((k-1) sqrt p) over the sampled tuples with k >= 2.
  double max_ratio = 0.0;
};

/// Checks |sum_x prod_i (x - a_i / p)| <= (k-1) sqrt p for 1 <= k <= max_k.
/// For each k, every k-subset is checked when there are at most `samples` of
/// them, otherwise `samples` random subsets drawn from a generator seeded
/// with (seed, p, k). The comparison itself is exact in integers.
BurgessStats burgess_check(const PrimeField& pf, std::size_t max_k, std::size_t samples, std::uint64_t seed);

struct CommonNeighborStats {
  std::uint64_t triples = 0;
  std::int64_t min_count = 0;
  std::int64_t max_count = 0;
  /// max | |(Γ(x) ∩ Γ(y)) \ Γ(z)| - p/8 |
  double max_deviation = 0.0;
  /// Triples exceeding 5 sqrt p + 1 (exact comparison).
  std::uint64_t over_bound = 0;
  /// Triples exceeding 2 sqrt p + 2 (exact comparison).
  std::uint64_t over_improved_bound = 0;
};

/// Requires p = 1 (mod 4). Enumerates unordered {x, y} and z outside it;
/// with `translate_to_zero`, only x = 0 (the Paley graph is invariant under
/// a -> a + t, so this covers every triple up to translation).
CommonNeighborStats common_neighbor_deviation(const PrimeField& pf, bool translate_to_zero = false);

/// True iff deviation d = |8c - p| / 8 satisfies d <= 5 sqrt p + 1, exactly.
bool within_common_neighbor_bound(std::int64_t count, std::uint64_t p);
/// Same against 2 sqrt p + 2.
bool within_improved_bound(std::int64_t count, std::uint64_t p);

/// L_p <= sqrt p, exactly.
bool within_hummel_bound(std::uint64_t run, std::uint64_t p);

}  // namespace pathsys
