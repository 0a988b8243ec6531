#include "frobkit/arith/modular.hpp"

#include <array>

#include "frobkit/errors.hpp"

namespace frobkit::arith {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if ((exp & 1U) != 0) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  a %= m;
  if (a == 0) throw DomainError("inv_mod: zero has no inverse");
  return pow_mod(a, m - 2, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  if (n < 37 * 37) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

Residue mod_reduce(const Integer& n, std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw DomainError("mod_reduce: modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Residue{n.mod_u64(p), p};
}

namespace {

// (2/n) extension factor for the residue a mod 8.
int two_factor(std::uint32_t a_mod8) {
  if (a_mod8 % 2 == 0) return 0;
  return (a_mod8 == 1 || a_mod8 == 7) ? 1 : -1;
}

}  // namespace

int kronecker(const Integer& a_in, const Integer& n_in) {
  Integer a = a_in;
  Integer n = n_in;
  if (n.is_zero()) return a.abs() == Integer(1) ? 1 : 0;
  int result = 1;
  if (n.sign() < 0) {
    n = -n;
    if (a.sign() < 0) result = -result;
  }
  if (n.is_even()) {
    if (a.is_even()) return 0;
    const int f = two_factor(a.mod_u32(8));
    while (n.is_even()) {
      n.shift_right(1);
      result *= f;
    }
  }
  // Jacobi symbol (a/n) for odd n > 0.
  a %= n;
  if (a.sign() < 0) a += n;
  while (!a.is_zero()) {
    while (a.is_even()) {
      a.shift_right(1);
      const std::uint32_t r = n.mod_u32(8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a.mod_u32(4) == 3 && n.mod_u32(4) == 3) result = -result;
    a %= n;
  }
  return n == Integer(1) ? result : 0;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  // Work with unsigned magnitudes so INT64_MIN is safe.
  std::uint64_t un = n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
  if (n < 0 && a < 0) result = -result;
  const auto a_mod8 = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) & 7U);
  if ((un & 1U) == 0) {
    if ((a & 1) == 0) return 0;
    const int f = two_factor(a_mod8);
    while ((un & 1U) == 0) {
      un >>= 1;
      result *= f;
    }
  }
  std::uint64_t ua;
  if (a >= 0) {
    ua = static_cast<std::uint64_t>(a) % un;
  } else {
    std::uint64_t m = (~static_cast<std::uint64_t>(a) + 1) % un;
    ua = m == 0 ? 0 : un - m;
  }
  while (ua != 0) {
    while ((ua & 1U) == 0) {
      ua >>= 1;
      const std::uint64_t r = un & 7U;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(ua, un);
    if ((ua & 3U) == 3 && (un & 3U) == 3) result = -result;
    ua %= un;
  }
  return un == 1 ? result : 0;
}

}  // namespace frobkit::arith
