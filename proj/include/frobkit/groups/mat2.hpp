#pragma once

#include <cstdint>
#include <string>

#include "frobkit/arith/fields.hpp"
#include "frobkit/errors.hpp"

namespace frobkit::groups {

/// 2x2 matrix [[a, b], [c, d]] over a small finite field F.
template <class F>
struct Mat2T {
  F a, b, c, d;

  static constexpr Mat2T identity() { return {F::one(), F::zero(), F::zero(), F::one()}; }
  static constexpr Mat2T scalar(F s) { return {s, F::zero(), F::zero(), s}; }

  constexpr F det() const { return a * d - b * c; }
  constexpr F trace() const { return a + d; }
  constexpr bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }

  Mat2T inverse() const {
    const F dt = det();
    if (dt.is_zero()) throw DomainError("Mat2: singular matrix");
    const F i = dt.inverse();
    return {d * i, -b * i, -c * i, a * i};
  }

  Mat2T pow(std::uint64_t e) const {
    Mat2T r = identity();
    Mat2T base = *this;
    while (e != 0) {
      if ((e & 1U) != 0) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// Smallest k >= 1 with M^k = I; throws DomainError for singular M.
  int order() const {
    if (det().is_zero()) throw DomainError("Mat2: singular matrix has no order");
    Mat2T x = *this;
    for (int k = 1;; ++k) {
      if (x == identity()) return k;
      x = x * *this;
    }
  }

  /// Row-major base-|F| digits of the entries' lexicographic keys. Ordering
  /// by this value is lexicographic ordering on the entries.
  constexpr std::uint32_t encode() const {
    constexpr std::uint32_t q = F::kSize;
    return ((a.lex_key() * q + b.lex_key()) * q + c.lex_key()) * q + d.lex_key();
  }

  std::string to_string() const {
    return "[[" + a.to_string() + "," + b.to_string() + "],[" + c.to_string() + "," + d.to_string() + "]]";
  }

  friend constexpr Mat2T operator*(const Mat2T& x, const Mat2T& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend constexpr Mat2T operator*(F s, const Mat2T& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
  friend constexpr bool operator==(const Mat2T&, const Mat2T&) = default;
};

using Mat2 = Mat2T<arith::F25>;

}  // namespace frobkit::groups
