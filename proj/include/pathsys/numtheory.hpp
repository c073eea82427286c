#pragma once

// Quadratic-residue machinery over prime fields F_p.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathsys/errors.hpp"

namespace pathsys {

/// (base^exp) mod m by square-and-multiply.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Smallest divisor d with 1 < d < n, if any (trial division up to sqrt(n)).
/// Returns nullopt for primes; n < 2 yields nullopt as well, callers check that.
std::optional<std::uint64_t> smallest_divisor(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Primes p <= limit in ascending order (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Legendre symbol (a/p) via Euler's criterion. Requires p an odd prime and
/// 0 <= a < p.
int legendre(std::uint64_t a, std::uint64_t p);

/// An odd prime together with its residue table. Immutable once built.
class PrimeField {
 public:
  /// Throws InputError for even or composite p, naming the divisor.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  /// Canonical representative of a in [0, p).
  std::int64_t reduce(std::int64_t a) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const { return reduce(-a); }
  /// Multiplicative inverse; throws InputError for a == 0 mod p.
  std::int64_t inverse(std::int64_t a) const;
  /// a / b in the field.
  std::int64_t div(std::int64_t a, std::int64_t b) const { return mul(a, inverse(b)); }

  /// Memoized Legendre symbol of a (any integer, reduced mod p first).
  int legendre(std::int64_t a) const { return table_[static_cast<std::size_t>(reduce(a))]; }
  bool is_residue(std::int64_t a) const { return legendre(a) == 1; }
  bool is_nonresidue(std::int64_t a) const { return legendre(a) == -1; }

  /// R, ascending.
  const std::vector<std::int64_t>& residues() const { return residues_; }
  /// N, ascending.
  const std::vector<std::int64_t>& nonresidues() const { return nonresidues_; }

 private:
  std::uint64_t p_;
  std::vector<signed char> table_;
  std::vector<std::int64_t> residues_;
  std::vector<std::int64_t> nonresidues_;
};

PrimeField make_prime_field(std::uint64_t p);

/// Prime p > 5 with -1 in R and 2, 3 in N. Never throws.
bool is_admissible(std::uint64_t p);

/// Human-readable reason why p is not admissible; nullopt when it is.
std::optional<std::string> admissibility_failure(std::uint64_t p);

/// All admissible primes <= limit, ascending.
std::vector<std::uint64_t> admissible_primes(std::uint64_t limit);

/// L_p: longest run a, a+1, ..., a+L-1 of non-residues. Zero is neither a
/// residue nor a non-residue, so runs cannot cross it and wrap-around is moot.
std::uint64_t max_nonresidue_run(const PrimeField& pf);

/// sum_{x in F_p} prod_i (x - a_i / p), with (0/p) = 0.
/// Points must be pairwise distinct and 1 <= k < p.
std::int64_t character_sum(const PrimeField& pf, std::span<const std::int64_t> points);

}  // namespace pathsys
