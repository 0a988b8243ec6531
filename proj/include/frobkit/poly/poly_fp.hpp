#pragma once

#include <cstdint>
#include <vector>

#include "frobkit/arith/modular.hpp"
#include "frobkit/poly/cycle_type.hpp"

namespace frobkit::poly {

/// Dense polynomial over F_p, constant term first, leading zeros trimmed.
/// The modulus must be a prime below 2^32.
class PolyFp {
 public:
  explicit PolyFp(std::uint64_t p) : p_(p) {}
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static PolyFp monomial(std::uint64_t p, std::size_t degree, std::uint64_t c = 1);

  std::uint64_t modulus() const { return p_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  arith::Residue coeff(std::size_t i) const;
  const std::vector<std::uint64_t>& raw() const { return c_; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  PolyFp derivative() const;
  PolyFp monic() const;
  std::uint64_t eval(std::uint64_t x) const;

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend bool operator==(const PolyFp&, const PolyFp&) = default;

  /// Quotient and remainder; throws DomainError on a zero divisor.
  static std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
  PolyFp operator%(const PolyFp& b) const { return divmod(*this, b).second; }
  PolyFp operator/(const PolyFp& b) const { return divmod(*this, b).first; }

  /// Monic gcd (zero when both inputs are zero).
  static PolyFp gcd(PolyFp a, PolyFp b);

  /// base^e mod m by square-and-multiply.
  static PolyFp pow_mod(const PolyFp& base, std::uint64_t e, const PolyFp& m);

 private:
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Number of distinct roots in F_p: deg gcd(X^p - X, f). Throws DomainError for f = 0.
int count_roots_mod_p(const PolyFp& f);

/// gcd(f, f') == 1. A nonzero constant is squarefree.
bool is_squarefree(const PolyFp& f);

/// Degrees of the irreducible factors of a squarefree f, via deterministic
/// distinct-degree factorization. Throws RamifiedError when f is not squarefree.
CycleType factorization_cycle_type(const PolyFp& f);

}  // namespace frobkit::poly
