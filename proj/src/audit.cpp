#include "pathsys/audit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <vector>

namespace pathsys {

namespace {

// C(n, k), saturating at `cap` + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

void record(BurgessStats& stats, const PrimeField& pf, const std::vector<std::int64_t>& points) {
  const std::int64_t s = character_sum(pf, points);
  const auto k = static_cast<std::int64_t>(points.size());
  ++stats.tuples;
  const __int128 lhs = static_cast<__int128>(s) * s;
  const __int128 rhs = static_cast<__int128>(k - 1) * (k - 1) * static_cast<__int128>(pf.p());
  if (lhs > rhs) ++stats.violations;
  if (k >= 2) {
    const double ratio = std::abs(static_cast<double>(s)) / (static_cast<double>(k - 1) * std::sqrt(static_cast<double>(pf.p())));
    stats.max_ratio = std::max(stats.max_ratio, ratio);
  }
}

bool within(std::int64_t scaled_deviation, std::int64_t slack, std::int64_t root_coeff, std::uint64_t p) {
  // scaled_deviation <= root_coeff * sqrt(p) + slack
  const std::int64_t t = scaled_deviation - slack;
  if (t <= 0) return true;
  return static_cast<__int128>(t) * t <= static_cast<__int128>(root_coeff) * root_coeff * static_cast<__int128>(p);
}

}  // namespace

BurgessStats burgess_check(const PrimeField& pf, std::size_t max_k, std::size_t samples, std::uint64_t seed) {
  BurgessStats stats;
  const std::uint64_t p = pf.p();
  for (std::size_t k = 1; k <= max_k && k < p; ++k) {
    if (binomial_capped(p, k, samples) <= samples) {
      std::vector<std::int64_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<std::int64_t>(i);
      for (;;) {
        record(stats, pf, pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == static_cast<std::int64_t>(p - k + i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
      continue;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(p) - 1);
    std::vector<std::int64_t> pick;
    for (std::size_t t = 0; t < samples; ++t) {
      pick.clear();
      while (pick.size() < k) {
        const auto x = dist(rng);
        if (std::find(pick.begin(), pick.end(), x) == pick.end()) pick.push_back(x);
      }
      record(stats, pf, pick);
    }
  }
  return stats;
}

bool within_common_neighbor_bound(std::int64_t count, std::uint64_t p) {
  return within(std::abs(8 * count - static_cast<std::int64_t>(p)), 8, 40, p);
}

bool within_improved_bound(std::int64_t count, std::uint64_t p) {
  return within(std::abs(8 * count - static_cast<std::int64_t>(p)), 16, 16, p);
}

bool within_hummel_bound(std::uint64_t run, std::uint64_t p) {
  return static_cast<unsigned __int128>(run) * run <= p;
}

CommonNeighborStats common_neighbor_deviation(const PrimeField& pf, bool translate_to_zero) {
  const std::uint64_t p = pf.p();
  if (p % 4 != 1) throw InputError("common_neighbor_deviation: p must be 1 mod 4");
  const std::size_t words = (p + 63) / 64;
  // nbr[v] = bitset of Γ(v); complement[v] = bitset of F_p \ Γ(v).
  std::vector<std::uint64_t> nbr(p * words, 0);
  std::vector<std::uint64_t> complement(p * words, 0);
  for (std::uint64_t v = 0; v < p; ++v) {
    for (std::uint64_t w = 0; w < p; ++w) {
      auto* row = pf.is_residue(static_cast<std::int64_t>(w) - static_cast<std::int64_t>(v)) ? &nbr : &complement;
      (*row)[v * words + w / 64] |= std::uint64_t{1} << (w % 64);
    }
  }
  CommonNeighborStats stats;
  bool first = true;
  std::vector<std::uint64_t> both(words);
  const std::uint64_t x_end = translate_to_zero ? 1 : p;
  for (std::uint64_t x = 0; x < x_end; ++x) {
    for (std::uint64_t y = x + 1; y < p; ++y) {
      for (std::size_t w = 0; w < words; ++w) both[w] = nbr[x * words + w] & nbr[y * words + w];
      for (std::uint64_t z = 0; z < p; ++z) {
        if (z == x || z == y) continue;
        std::int64_t count = 0;
        for (std::size_t w = 0; w < words; ++w) count += std::popcount(both[w] & complement[z * words + w]);
        ++stats.triples;
        if (first || count < stats.min_count) stats.min_count = count;
        if (first || count > stats.max_count) stats.max_count = count;
        first = false;
        if (!within_common_neighbor_bound(count, p)) ++stats.over_bound;
        if (!within_improved_bound(count, p)) ++stats.over_improved_bound;
      }
    }
  }
  const double eighth = static_cast<double>(p) / 8.0;
  stats.max_deviation = std::max(std::abs(static_cast<double>(stats.max_count) - eighth),
                                 std::abs(static_cast<double>(stats.min_count) - eighth));
  return stats;
}

}  // namespace pathsys
