#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "pathsys/audit.hpp"

using namespace pathsys;

namespace {

// Counts |(Γ(x) ∩ Γ(y)) \ Γ(z)| straight from the set of squares.
std::vector<std::int64_t> common_counts(std::int64_t p) {
  const auto sq = oracle::squares_mod(p);
  auto adj = [&](std::int64_t a, std::int64_t b) { return sq.count(((a - b) % p + p) % p) > 0; };
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = x + 1; y < p; ++y) {
      for (std::int64_t z = 0; z < p; ++z) {
        if (z == x || z == y) continue;
        std::int64_t c = 0;
        for (std::int64_t v = 0; v < p; ++v) c += adj(v, x) && adj(v, y) && !adj(v, z);
        out.push_back(c);
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("audit") {

TEST_CASE("exact bound helpers") {
  // 5 sqrt(29) + 1 = 27.93
  CHECK(within_common_neighbor_bound(3, 29));
  CHECK(within_common_neighbor_bound(31, 29));  // |248 - 29| / 8 = 27.375
  CHECK_FALSE(within_common_neighbor_bound(32, 29));  // 28.375
  // 2 sqrt(29) + 2 = 12.77
  CHECK(within_improved_bound(16, 29));  // 12.375
  CHECK_FALSE(within_improved_bound(17, 29));  // 13.375
  CHECK(within_hummel_bound(3, 29));
  CHECK(within_hummel_bound(5, 25));
  CHECK_FALSE(within_hummel_bound(4, 13));
  CHECK_FALSE(within_hummel_bound(6, 35));
}

TEST_CASE("exact helpers agree with floating point away from ties") {
  for (std::uint64_t p : {13u, 29u, 53u, 101u, 1009u}) {
    const double root = std::sqrt(static_cast<double>(p));
    for (std::int64_t c = 0; c < 400; ++c) {
      const double d = std::abs(static_cast<double>(c) - static_cast<double>(p) / 8.0);
      if (std::abs(d - (5 * root + 1)) > 1e-6) CHECK(within_common_neighbor_bound(c, p) == (d <= 5 * root + 1));
      if (std::abs(d - (2 * root + 2)) > 1e-6) CHECK(within_improved_bound(c, p) == (d <= 2 * root + 2));
    }
  }
}

TEST_CASE("common-neighbor counts for p = 29") {
  const PrimeField pf(29);
  const auto counts = common_counts(29);
  const CommonNeighborStats s = common_neighbor_deviation(pf);
  CHECK(s.triples == counts.size());
  CHECK(s.min_count == *std::min_element(counts.begin(), counts.end()));
  CHECK(s.max_count == *std::max_element(counts.begin(), counts.end()));
  double worst = 0;
  for (auto c : counts) worst = std::max(worst, std::abs(static_cast<double>(c) - 29.0 / 8));
  CHECK(s.max_deviation == doctest::Approx(worst));
  CHECK(s.over_bound == 0);

  const CommonNeighborStats t = common_neighbor_deviation(pf, true);
  CHECK(t.triples == 28u * 27u);
  CHECK(t.min_count == s.min_count);
  CHECK(t.max_count == s.max_count);
  CHECK(s.over_improved_bound * 2 == t.over_improved_bound * 29);

  CHECK_THROWS_AS(common_neighbor_deviation(PrimeField(7)), InputError);
}

TEST_CASE("translation covers every triple") {
  for (std::uint64_t p : {13u, 37u, 61u}) {
    const PrimeField pf(p);
    const auto full = common_neighbor_deviation(pf);
    const auto fixed = common_neighbor_deviation(pf, true);
    CHECK(full.min_count == fixed.min_count);
    CHECK(full.max_count == fixed.max_count);
    // Each unordered {x, y} has two translates putting an endpoint at 0
    // among the p translates of the pair, so counts scale by p / 2.
    CHECK(full.over_improved_bound * 2 == fixed.over_improved_bound * p);
  }
}

TEST_CASE("character sum bound on small primes") {
  for (std::uint64_t p : {5u, 13u, 29u, 53u}) {
    const BurgessStats s = burgess_check(PrimeField(p), 3, 100000, 1);
    CHECK(s.violations == 0);
    CHECK(s.max_ratio <= 1.0);
    std::uint64_t expected = 0;
    for (std::uint64_t k = 1; k <= 3; ++k) {
      std::uint64_t c = 1;
      for (std::uint64_t i = 0; i < k; ++i) c = c * (p - i) / (i + 1);
      expected += c;
    }
    CHECK(s.tuples == expected);
  }
  const BurgessStats sampled = burgess_check(PrimeField(1009), 4, 50, 7);
  CHECK(sampled.tuples == 50 + 50 + 50 + 50);
  CHECK(sampled.violations == 0);
  const BurgessStats again = burgess_check(PrimeField(1009), 4, 50, 7);
  CHECK(again.max_ratio == sampled.max_ratio);
}

TEST_CASE("longest run bound exceptions") {
  std::vector<std::uint64_t> exceptions;
  for (std::uint64_t p : primes_up_to(3000)) {
    if (p == 2) continue;
    if (!within_hummel_bound(max_nonresidue_run(PrimeField(p)), p)) exceptions.push_back(p);
  }
  CHECK(exceptions == std::vector<std::uint64_t>{13});
}

}  // TEST_SUITE
