#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobkit/arith/integer.hpp"
#include "frobkit/poly/poly_fp.hpp"
#include "frobkit/report.hpp"

namespace frobkit::poly {

using arith::Integer;

/// Dense integer polynomial, constant term first, leading zeros trimmed.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Integer> coeffs);
  PolyZ(std::initializer_list<std::int64_t> coeffs);

  /// One line of whitespace-separated decimal coefficients "c0 c1 ... cd".
  static PolyZ parse_line(std::string_view line);
  std::string to_line() const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Integer& coeff(std::size_t i) const;
  const std::vector<Integer>& coefficients() const { return c_; }
  const Integer& leading() const { return c_.back(); }

  PolyZ derivative() const;
  Integer content() const;
  /// Only even powers of X carry nonzero coefficients.
  bool is_even() const;

  friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  friend bool operator==(const PolyZ&, const PolyZ&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// X^n - X - 1.
PolyZ x_pow_minus_x_minus_one(int n);

/// Coefficientwise reduction; the degree drops when p divides the leading coefficient.
PolyFp reduce_mod_p(const PolyZ& f, std::uint64_t p);

/// Res(f, g) as the determinant of the Sylvester matrix (fraction-free Bareiss elimination).
Integer resultant(const PolyZ& f, const PolyZ& g);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f). Throws DomainError for constant f.
Integer discriminant_Z(const PolyZ& f);

/// (-1)^((n-1)(n-2)/2) (n^n - (1-n)^(n-1)). Throws DomainError for n < 2.
Integer disc_formula(int n);

struct SquarefreeVerdict {
  /// Smallest prime q <= bound with q^2 | d, if any. Absence is NOT a proof of squarefreeness.
  std::optional<std::uint32_t> square_factor;
  std::uint32_t bound = 0;
};

/// Trial division by primes up to bound. Throws DomainError for d == 0.
SquarefreeVerdict squarefree_witness(const Integer& d, std::uint32_t bound);

/// Number of distinct real roots via a Sturm sequence. Throws DomainError
/// when f is zero or not squarefree over Q.
int real_root_count(const PolyZ& f);

}  // namespace frobkit::poly

namespace frobkit::poly {

/// Resultant route vs closed form for 2 <= n <= nmax, disc(f5) = 2869, and no
/// square factor below bound for n <= squarefree_nmax.
Report verify_discriminants(int nmax = 40, int squarefree_nmax = 20, std::uint32_t bound = 100000);

}  // namespace frobkit::poly
