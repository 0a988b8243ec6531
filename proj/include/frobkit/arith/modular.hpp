#pragma once

#include <cstdint>
#include <vector>

#include "frobkit/arith/integer.hpp"

namespace frobkit::arith {

/// An element of Z/pZ for a prime p < 2^32.
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const Residue&, const Residue&) = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse modulo a prime m; throws DomainError for a == 0 mod m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic for all 64-bit inputs (trial division, then Miller-Rabin
/// with the first twelve prime bases).
bool is_prime(std::uint64_t n);

/// Ascending list of primes <= limit; empty when limit < 2.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// n mod p in [0, p). Throws DomainError unless p is a prime below 2^32.
Residue mod_reduce(const Integer& n, std::uint64_t p);

/// Kronecker symbol (a/n), fully extended to even, negative and zero n.
int kronecker(const Integer& a, const Integer& n);
int kronecker(std::int64_t a, std::int64_t n);

}  // namespace frobkit::arith
