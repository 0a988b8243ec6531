#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frobkit::arith {

/// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
///
/// Canonical form: no leading zero limbs, and sign() == 0 iff the magnitude is
/// empty. Division truncates toward zero like the built-in operators, so
/// `a == (a / b) * b + a % b` and the remainder has the sign of `a`.
/// Schoolbook algorithms throughout; the largest operands in this project are
/// a few hundred decimal digits.
class Integer {
 public:
  using Limb = std::uint32_t;

  Integer() = default;
  Integer(std::int64_t v);  // NOLINT(google-explicit-constructor)
  Integer(int v) : Integer(static_cast<std::int64_t>(v)) {}  // NOLINT
  static Integer from_u64(std::uint64_t v);

  /// Optional '+' or '-' followed by at least one decimal digit. Throws ParseError.
  static Integer parse(std::string_view text);
  std::string to_string() const;

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_odd() const { return sign_ != 0 && (mag_[0] & 1U) != 0; }
  bool is_even() const { return !is_odd(); }
  std::size_t limb_count() const { return mag_.size(); }
  std::size_t bit_length() const;

  bool fits_int64() const;
  /// Throws DomainError when the value does not fit.
  std::int64_t to_int64() const;

  Integer operator-() const;
  Integer abs() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);
  Integer& operator/=(const Integer& rhs);
  Integer& operator%=(const Integer& rhs);

  /// In-place this += a * b, without temporaries beyond the product.
  void add_product(const Integer& a, const Integer& b);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(const Integer& a, const Integer& b);
  friend Integer operator/(const Integer& a, const Integer& b) { return divmod(a, b).first; }
  friend Integer operator%(const Integer& a, const Integer& b) { return divmod(a, b).second; }

  /// Truncated quotient and remainder. Throws DomainError on division by zero.
  static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b);

  /// Non-negative residue of this value modulo m (m > 0).
  std::uint32_t mod_u32(std::uint32_t m) const;
  std::uint64_t mod_u64(std::uint64_t m) const;

  /// Exact division by a small positive divisor; quotient truncates toward zero.
  Integer div_u32(std::uint32_t d) const;

  Integer& shift_right(std::size_t bits);  // magnitude shift, sign kept (truncating)

  static Integer pow(Integer base, unsigned exponent);
  static Integer gcd(Integer a, Integer b);

  friend bool operator==(const Integer& a, const Integer& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  void trim();
  static int cmp_mag(const std::vector<Limb>& a, const std::vector<Limb>& b);
  static void add_mag(std::vector<Limb>& a, const std::vector<Limb>& b);
  // requires |a| >= |b|
  static void sub_mag(std::vector<Limb>& a, const std::vector<Limb>& b);
  // a := b - a, requires |b| >= |a|
  static void rsub_mag(std::vector<Limb>& a, const std::vector<Limb>& b);
  static std::vector<Limb> mul_mag(const std::vector<Limb>& a, const std::vector<Limb>& b);
  static Limb divmod_small(std::vector<Limb>& a, Limb d);
  static void divmod_mag(const std::vector<Limb>& a, const std::vector<Limb>& b,
                         std::vector<Limb>& q, std::vector<Limb>& r);
  void add_signed(const Integer& rhs, int rhs_sign);

  int sign_ = 0;
  std::vector<Limb> mag_;
};

}  // namespace frobkit::arith
