#include "pathsys/numtheory.hpp"

#include <algorithm>
#include <set>

namespace pathsys {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % m;
  while (exp > 0) {
    if (exp & 1U) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::optional<std::uint64_t> smallest_divisor(std::uint64_t n) {
  if (n < 4) return std::nullopt;
  if (n % 2 == 0) return 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return d;
  }
  return std::nullopt;
}

bool is_prime(std::uint64_t n) { return n >= 2 && !smallest_divisor(n).has_value(); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3) throw InputError(std::to_string(p) + " is not an odd prime");
  if (p % 2 == 0) throw InputError(std::to_string(p) + " is even (divisible by 2)");
  if (auto d = smallest_divisor(p)) {
    throw InputError(std::to_string(p) + " is not prime (divisible by " + std::to_string(*d) + ")");
  }
}

int euler_criterion(std::uint64_t a, std::uint64_t p) {
  if (a == 0) return 0;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

int legendre(std::uint64_t a, std::uint64_t p) {
  require_odd_prime(p);
  if (a >= p) throw InputError("legendre: argument " + std::to_string(a) + " not reduced mod " + std::to_string(p));
  return euler_criterion(a, p);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  require_odd_prime(p);
  table_.assign(p, 0);
  for (std::uint64_t a = 1; a < p; ++a) {
    const int v = euler_criterion(a, p);
    table_[a] = static_cast<signed char>(v);
    (v == 1 ? residues_ : nonresidues_).push_back(static_cast<std::int64_t>(a));
  }
}

std::int64_t PrimeField::reduce(std::int64_t a) const {
  const auto m = static_cast<std::int64_t>(p_);
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t PrimeField::mul(std::int64_t a, std::int64_t b) const {
  const auto r = static_cast<__int128>(reduce(a)) * reduce(b) % static_cast<__int128>(p_);
  return static_cast<std::int64_t>(r);
}

std::int64_t PrimeField::inverse(std::int64_t a) const {
  const std::int64_t r = reduce(a);
  if (r == 0) throw InputError("zero has no inverse mod " + std::to_string(p_));
  return static_cast<std::int64_t>(mod_pow(static_cast<std::uint64_t>(r), p_ - 2, p_));
}

PrimeField make_prime_field(std::uint64_t p) { return PrimeField(p); }

std::optional<std::string> admissibility_failure(std::uint64_t p) {
  const std::string ps = std::to_string(p);
  if (p < 2) return ps + " is not prime";
  if (auto d = smallest_divisor(p)) return ps + " is not prime (divisible by " + std::to_string(*d) + ")";
  if (p <= 5) return ps + " is not a prime greater than 5";
  if (euler_criterion(p - 1, p) != 1) return "-1 is not a quadratic residue mod " + ps;
  if (euler_criterion(2, p) != -1) return "2 is a quadratic residue mod " + ps;
  if (euler_criterion(3, p) != -1) return "3 is a quadratic residue mod " + ps;
  return std::nullopt;
}

bool is_admissible(std::uint64_t p) { return !admissibility_failure(p).has_value(); }

std::vector<std::uint64_t> admissible_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(limit)) {
    if (p > 5 && is_admissible(p)) out.push_back(p);
  }
  return out;
}

std::uint64_t max_nonresidue_run(const PrimeField& pf) {
  std::uint64_t best = 0;
  std::uint64_t run = 0;
  for (std::uint64_t a = 1; a < pf.p(); ++a) {
    run = pf.is_nonresidue(static_cast<std::int64_t>(a)) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

std::int64_t character_sum(const PrimeField& pf, std::span<const std::int64_t> points) {
  if (points.empty() || points.size() >= pf.p()) {
    throw InputError("character_sum: need 1 <= k < p points, got " + std::to_string(points.size()));
  }
  std::vector<std::int64_t> reduced;
  reduced.reserve(points.size());
  std::set<std::int64_t> seen;
  for (auto a : points) {
    const auto r = pf.reduce(a);
    if (!seen.insert(r).second) throw InputError("character_sum: duplicate point " + std::to_string(r));
    reduced.push_back(r);
  }
  std::int64_t total = 0;
  const auto p = static_cast<std::int64_t>(pf.p());
  for (std::int64_t x = 0; x < p; ++x) {
    int prod = 1;
    for (auto a : reduced) {
      prod *= pf.legendre(x - a);
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

}  // namespace pathsys
