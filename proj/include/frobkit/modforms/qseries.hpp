#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "frobkit/arith/integer.hpp"
#include "frobkit/report.hpp"

namespace frobkit::modforms {

using arith::Integer;

/// a_0 + a_1 q + ... + a_N q^N + O(q^(N+1)).
class QSeries {
 public:
  /// Coefficients beyond index N are dropped; missing ones are zero.
  QSeries(std::vector<Integer> coeffs, int order);
  static QSeries zero(int order);
  static QSeries monomial(int power, int order);

  int order() const { return n_; }
  /// Throws DomainError beyond the truncation order.
  const Integer& operator[](int i) const;
  const std::vector<Integer>& coefficients() const { return c_; }

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  /// Truncated to the smaller order.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries&, const QSeries&) = default;

  /// Multiplies by sum_i s_i q^(e_i) for (e_i, s_i) with s_i = +-1.
  QSeries times_signed_sparse(const std::vector<std::pair<int, int>>& terms) const;
  /// Exact division of every coefficient; throws DomainError if some coefficient is not divisible.
  QSeries divide_exact(std::int64_t d) const;

 private:
  std::vector<Integer> c_;
  int n_;
};

/// prod_{k>=1} (1 - q^(d k)) through q^N as signed sparse terms (pentagonal numbers).
std::vector<std::pair<int, int>> euler_product_terms(int d, int order);

/// q^(sum d e / 24) prod_d prod_k (1 - q^(d k))^e. Throws DomainError when the
/// leading power is not an integer, an exponent is negative, d < 1, or N < 1.
QSeries eta_product(const std::vector<std::pair<int, int>>& factors, int order);

/// sum over (x, y) in Z^2 of q^(a x^2 + b x y + c y^2). Throws DomainError unless positive definite.
QSeries theta_binary_qf(std::int64_t a, std::int64_t b, std::int64_t c, int order);

/// The weight-one form of level 23 (as eta product and as (Theta(1,1,6) - Theta(2,1,3))/2) and Delta, through q^N.
struct N3Series {
  QSeries eta_form;
  QSeries theta_form;
  QSeries delta;
};
N3Series n3_series(int order);

/// eta form = theta form, Delta = F mod 23, and N_p(X^3 - X - 1) = 1 + a_p for p <= pmax, p != 23.
/// Throws DomainError unless pmax <= N.
Report verify_n3(int n_coeff, int pmax);

/// CSV "n,a_n,tau_mod_23" for n = 1..N.
void write_n3_csv(std::ostream& out, const N3Series& s);

}  // namespace frobkit::modforms
