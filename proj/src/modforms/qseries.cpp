#include "frobkit/modforms/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>

#include "frobkit/arith/modular.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/poly/poly_z.hpp"

namespace frobkit::modforms {

QSeries::QSeries(std::vector<Integer> coeffs, int order) : c_(std::move(coeffs)), n_(order) {
  if (order < 0) throw DomainError("QSeries: negative truncation order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries QSeries::zero(int order) { return QSeries({}, order); }

QSeries QSeries::monomial(int power, int order) {
  QSeries s = zero(order);
  if (power >= 0 && power <= order) s.c_[static_cast<std::size_t>(power)] = 1;
  return s;
}

const Integer& QSeries::operator[](int i) const {
  if (i < 0 || i > n_) throw DomainError("QSeries: index beyond truncation order");
  return c_[static_cast<std::size_t>(i)];
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.n_, b.n_);
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.c_[i] + b.c_[i];
  return QSeries(std::move(v), n);
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.n_, b.n_);
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.c_[i] - b.c_[i];
  return QSeries(std::move(v), n);
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.n_, b.n_);
  std::vector<Integer> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      v[static_cast<std::size_t>(i + j)].add_product(a.c_[static_cast<std::size_t>(i)], b.c_[static_cast<std::size_t>(j)]);
    }
  }
  return QSeries(std::move(v), n);
}

QSeries QSeries::times_signed_sparse(const std::vector<std::pair<int, int>>& terms) const {
  std::vector<Integer> v(c_.size());
  for (const auto& [e, s] : terms) {
    for (int i = 0; i + e <= n_; ++i) {
      const auto& x = c_[static_cast<std::size_t>(i)];
      if (x.is_zero()) continue;
      if (s > 0) {
        v[static_cast<std::size_t>(i + e)] += x;
      } else {
        v[static_cast<std::size_t>(i + e)] -= x;
      }
    }
  }
  return QSeries(std::move(v), n_);
}

QSeries QSeries::divide_exact(std::int64_t d) const {
  const Integer dd(d);
  std::vector<Integer> v;
  v.reserve(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    auto [q, r] = Integer::divmod(c_[i], dd);
    if (!r.is_zero()) throw DomainError("QSeries: coefficient " + std::to_string(i) + " not divisible");
    v.push_back(std::move(q));
  }
  return QSeries(std::move(v), n_);
}

std::vector<std::pair<int, int>> euler_product_terms(int d, int order) {
  // prod (1 - x^k) = sum_m (-1)^m x^(m(3m-1)/2), m over all integers, with x = q^d.
  std::vector<std::pair<int, int>> t{{0, 1}};
  for (std::int64_t m = 1;; ++m) {
    const std::int64_t e1 = d * (m * (3 * m - 1) / 2);
    const std::int64_t e2 = d * (m * (3 * m + 1) / 2);
    if (e1 > order) break;
    const int s = (m % 2 == 0) ? 1 : -1;
    t.emplace_back(static_cast<int>(e1), s);
    if (e2 <= order) t.emplace_back(static_cast<int>(e2), s);
  }
  return t;
}

QSeries eta_product(const std::vector<std::pair<int, int>>& factors, int order) {
  if (order < 1) throw DomainError("eta_product: truncation order must be at least 1");
  std::int64_t weight = 0;
  for (const auto& [d, e] : factors) {
    if (d < 1) throw DomainError("eta_product: scale must be positive");
    if (e < 0) throw DomainError("eta_product: negative exponents are not supported");
    weight += static_cast<std::int64_t>(d) * e;
  }
  if (weight % 24 != 0) throw DomainError("eta_product: leading power sum(d e)/24 is not an integer");
  QSeries s = QSeries::monomial(static_cast<int>(weight / 24), order);
  for (const auto& [d, e] : factors) {
    const auto terms = euler_product_terms(d, order);
    for (int i = 0; i < e; ++i) s = s.times_signed_sparse(terms);
  }
  return s;
}

QSeries theta_binary_qf(std::int64_t a, std::int64_t b, std::int64_t c, int order) {
  const std::int64_t disc = 4 * a * c - b * b;
  if (a <= 0 || disc <= 0) throw DomainError("theta_binary_qf: form is not positive definite");
  if (order < 0) throw DomainError("theta_binary_qf: negative truncation order");
  // 4a Q(x, y) = (2ax + by)^2 + disc y^2.
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(order) + 1, 0);
  const std::int64_t n = order;
  const auto ymax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(4 * a * n) / static_cast<double>(disc))) + 1;
  for (std::int64_t y = -ymax; y <= ymax; ++y) {
    const std::int64_t rest = 4 * a * n - disc * y * y;
    if (rest < 0) continue;
    const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest))) + 1;
    const std::int64_t lo = (-r - b * y) / (2 * a) - 1;
    const std::int64_t hi = (r - b * y) / (2 * a) + 1;
    for (std::int64_t x = lo; x <= hi; ++x) {
      const std::int64_t q = a * x * x + b * x * y + c * y * y;
      if (q >= 0 && q <= n) ++counts[static_cast<std::size_t>(q)];
    }
  }
  std::vector<Integer> v;
  v.reserve(counts.size());
  for (auto k : counts) v.push_back(Integer::from_u64(k));
  return QSeries(std::move(v), order);
}

N3Series n3_series(int order) {
  QSeries diff = theta_binary_qf(1, 1, 6, order) - theta_binary_qf(2, 1, 3, order);
  return {eta_product({{1, 1}, {23, 1}}, order), diff.divide_exact(2), eta_product({{1, 24}}, order)};
}

namespace {

std::string mismatch_text(int first, int count, int order) {
  if (count == 0) return "0 mismatches through n=" + std::to_string(order);
  return std::to_string(count) + " mismatches, first at n=" + std::to_string(first);
}

}  // namespace

Report verify_n3(int n_coeff, int pmax) {
  if (pmax > n_coeff) throw DomainError("verify_n3: need pmax <= N");
  Report rep("n3");
  const QSeries diff = theta_binary_qf(1, 1, 6, n_coeff) - theta_binary_qf(2, 1, 3, n_coeff);
  int odd = 0;
  int first_odd = -1;
  for (int i = 0; i <= n_coeff; ++i) {
    if (diff[i].is_odd()) {
      if (odd++ == 0) first_odd = i;
    }
  }
  rep.add("n3.theta_parity", "Theta(1,1,6) - Theta(2,1,3)", mismatch_text(first_odd, odd, n_coeff),
          mismatch_text(-1, 0, n_coeff), odd == 0);
  if (odd != 0) return rep;

  const N3Series s = n3_series(n_coeff);
  int bad = 0;
  int first = -1;
  for (int i = 0; i <= n_coeff; ++i) {
    if (s.eta_form[i] != s.theta_form[i] && bad++ == 0) first = i;
  }
  rep.add("n3.eta_equals_theta", "F", mismatch_text(first, bad, n_coeff), mismatch_text(-1, 0, n_coeff), bad == 0);

  bad = 0;
  first = -1;
  for (int i = 0; i <= n_coeff; ++i) {
    if ((s.delta[i] - s.eta_form[i]).mod_u32(23) != 0 && bad++ == 0) first = i;
  }
  rep.add("n3.delta_congruence", "Delta - F mod 23", mismatch_text(first, bad, n_coeff), mismatch_text(-1, 0, n_coeff),
          bad == 0);
  rep.expect_eq("n3.a1", "F", s.eta_form[1].to_string(), "1");
  rep.expect_eq("n3.a2", "F", s.eta_form[2].to_string(), "-1");
  rep.expect_eq("n3.tau2", "Delta", s.delta[2].to_string(), "-24");

  const poly::PolyZ f3{-1, -1, 0, 1};
  bad = 0;
  int first_p = -1;
  int checked = 0;
  std::map<std::string, int> dist;
  for (std::uint32_t p : arith::primes_up_to(static_cast<std::uint32_t>(pmax))) {
    if (p == 23) continue;
    ++checked;
    const int roots = poly::count_roots_mod_p(poly::reduce_mod_p(f3, p));
    const Integer ap = s.eta_form[static_cast<int>(p)];
    ++dist[ap.to_string()];
    if (Integer(roots) != Integer(1) + ap && bad++ == 0) first_p = static_cast<int>(p);
  }
  rep.add("n3.root_count", "N_p(f3) = 1 + a_p, p <= " + std::to_string(pmax),
          bad == 0 ? std::to_string(checked) + " primes agree"
                   : std::to_string(bad) + " primes disagree, first p=" + std::to_string(first_p),
          std::to_string(checked) + " primes agree", bad == 0);
  std::string d;
  for (const auto& [v, c] : dist) d += (d.empty() ? "" : ", ") + v + ":" + std::to_string(c);
  rep.note("n3.ap_distribution", d);
  return rep;
}

void write_n3_csv(std::ostream& out, const N3Series& s) {
  out << "n,a_n,tau_mod_23\n";
  for (int i = 1; i <= s.eta_form.order(); ++i) {
    out << i << ',' << s.eta_form[i].to_string() << ',' << s.delta[i].mod_u32(23) << '\n';
  }
}

}  // namespace frobkit::modforms
