#pragma once

#include <cstdint>
#include <string>

#include "frobkit/errors.hpp"

namespace frobkit::arith {

/// Z/PZ for a small prime P, used as a matrix entry type.
template <std::uint32_t P>
class SmallPrimeField {
 public:
  static constexpr std::uint32_t kSize = P;

  constexpr SmallPrimeField() = default;
  constexpr explicit SmallPrimeField(std::int64_t v)
      : v_(static_cast<std::uint32_t>(((v % static_cast<std::int64_t>(P)) + P) % P)) {}

  static constexpr SmallPrimeField zero() { return SmallPrimeField(0); }
  static constexpr SmallPrimeField one() { return SmallPrimeField(1); }

  constexpr std::uint32_t value() const { return v_; }
  /// Index in [0, P).
  constexpr std::uint32_t code() const { return v_; }
  constexpr std::uint32_t lex_key() const { return v_; }
  static constexpr SmallPrimeField from_code(std::uint32_t c) { return SmallPrimeField(c); }

  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr SmallPrimeField operator+(SmallPrimeField a, SmallPrimeField b) {
    return SmallPrimeField(static_cast<std::int64_t>(a.v_ + b.v_));
  }
  friend constexpr SmallPrimeField operator-(SmallPrimeField a, SmallPrimeField b) {
    return SmallPrimeField(static_cast<std::int64_t>(a.v_) + P - b.v_);
  }
  friend constexpr SmallPrimeField operator*(SmallPrimeField a, SmallPrimeField b) {
    return SmallPrimeField(static_cast<std::int64_t>(a.v_) * b.v_);
  }
  constexpr SmallPrimeField operator-() const { return SmallPrimeField(static_cast<std::int64_t>(P) - v_); }

  constexpr SmallPrimeField inverse() const {
    if (v_ == 0) throw DomainError("inverse of zero");
    for (std::uint32_t c = 1; c < P; ++c) {
      if ((c * v_) % P == 1) return SmallPrimeField(c);
    }
    throw InternalError("no inverse in prime field");
  }

  friend constexpr bool operator==(SmallPrimeField, SmallPrimeField) = default;

  std::string to_string() const { return std::to_string(v_); }

 private:
  std::uint32_t v_ = 0;
};

using F5 = SmallPrimeField<5>;

/// F_25 = F_5[t]/(t^2 - 2). Elements are a + b*z with z := t; z has
/// multiplicative order 8 (z^2 = 2, z^4 = -1).
class F25 {
 public:
  static constexpr std::uint32_t kSize = 25;

  constexpr F25() = default;
  constexpr F25(std::int64_t a, std::int64_t b) : a_(F5(a)), b_(F5(b)) {}
  constexpr explicit F25(F5 a, F5 b = F5(0)) : a_(a), b_(b) {}

  static constexpr F25 zero() { return F25(0, 0); }
  static constexpr F25 one() { return F25(1, 0); }
  /// The fixed primitive 8th root of unity with z^2 = 2.
  static constexpr F25 zeta() { return F25(0, 1); }

  constexpr F5 a() const { return a_; }
  constexpr F5 b() const { return b_; }
  constexpr bool in_prime_field() const { return b_.is_zero(); }
  constexpr bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// a + 5b, in [0, 25).
  constexpr std::uint32_t code() const { return a_.value() + 5 * b_.value(); }
  static constexpr F25 from_code(std::uint32_t c) {
    return F25(static_cast<std::int64_t>(c % 5), static_cast<std::int64_t>(c / 5));
  }
  /// Lexicographic key on (a, b): 5a + b.
  constexpr std::uint32_t lex_key() const { return 5 * a_.value() + b_.value(); }

  friend constexpr F25 operator+(F25 x, F25 y) { return F25(x.a_ + y.a_, x.b_ + y.b_); }
  friend constexpr F25 operator-(F25 x, F25 y) { return F25(x.a_ - y.a_, x.b_ - y.b_); }
  constexpr F25 operator-() const { return F25(-a_, -b_); }
  friend constexpr F25 operator*(F25 x, F25 y) {
    // (a + bz)(c + dz) = ac + 2bd + (ad + bc) z
    return F25(x.a_ * y.a_ + F5(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }

  /// Norm a^2 - 2b^2 to F_5; zero only for the zero element.
  constexpr F5 norm() const { return a_ * a_ - F5(2) * b_ * b_; }

  constexpr F25 inverse() const {
    if (is_zero()) throw DomainError("F25: inverse of zero");
    F5 n = norm().inverse();
    return F25(a_ * n, -b_ * n);
  }

  constexpr F25 pow(std::uint64_t e) const {
    F25 r = one();
    F25 base = *this;
    while (e != 0) {
      if ((e & 1U) != 0) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  friend constexpr bool operator==(F25, F25) = default;

  /// "3", "2z", "1+4z".
  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string zpart = (b_.value() == 1 ? std::string() : b_.to_string()) + "z";
    if (a_.is_zero()) return zpart;
    return a_.to_string() + "+" + zpart;
  }

 private:
  F5 a_;
  F5 b_;
};

}  // namespace frobkit::arith
