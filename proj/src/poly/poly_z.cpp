#include "frobkit/poly/poly_z.hpp"

#include <algorithm>
#include <sstream>

#include "frobkit/errors.hpp"

namespace frobkit::poly {

PolyZ::PolyZ(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyZ::PolyZ(std::initializer_list<std::int64_t> coeffs) {
  for (auto c : coeffs) c_.emplace_back(c);
  trim();
}

void PolyZ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyZ PolyZ::parse_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string tok;
  std::vector<Integer> coeffs;
  while (in >> tok) coeffs.push_back(Integer::parse(tok));
  return PolyZ(std::move(coeffs));
}

std::string PolyZ::to_line() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i != 0) out += ' ';
    out += c_[i].to_string();
  }
  return out;
}

const Integer& PolyZ::coeff(std::size_t i) const {
  static const Integer kZero;
  return i < c_.size() ? c_[i] : kZero;
}

PolyZ PolyZ::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Integer(static_cast<std::int64_t>(i)));
  return PolyZ(std::move(d));
}

Integer PolyZ::content() const {
  Integer g;
  for (const auto& c : c_) g = Integer::gcd(g, c);
  return g;
}

bool PolyZ::is_even() const {
  for (std::size_t i = 1; i < c_.size(); i += 2) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
  std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return PolyZ(std::move(v));
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) {
  std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return PolyZ(std::move(v));
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return PolyZ(std::move(v));
}

PolyZ x_pow_minus_x_minus_one(int n) {
  if (n < 2) throw DomainError("x_pow_minus_x_minus_one: n must be >= 2");
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c[0] = -1;
  c[1] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  return PolyZ(std::move(c));
}

PolyFp reduce_mod_p(const PolyZ& f, std::uint64_t p) {
  std::vector<std::uint64_t> v;
  v.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) v.push_back(arith::mod_reduce(c, p).value);
  return PolyFp(p, std::move(v));
}

Integer resultant(const PolyZ& f, const PolyZ& g) {
  if (f.is_zero() || g.is_zero()) return Integer();
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t k = m + n;
  if (k == 0) return Integer(1);
  // Sylvester matrix, coefficients from the highest degree down.
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) a[i][i + j] = f.coeff(m - j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) a[n + i][i + j] = g.coeff(n - j);
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (a[i][i].is_zero()) {
      std::size_t r = i + 1;
      while (r < k && a[r][i].is_zero()) ++r;
      if (r == k) return Integer();
      std::swap(a[i], a[r]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) {
        Integer t = a[r][c] * a[i][i];
        t -= a[r][i] * a[i][c];
        a[r][c] = t / prev;  // exact by Sylvester's identity
      }
      a[r][i] = Integer();
    }
    prev = a[i][i];
  }
  Integer det = a[k - 1][k - 1];
  return sign < 0 ? -det : det;
}

Integer discriminant_Z(const PolyZ& f) {
  if (f.degree() < 1) throw DomainError("discriminant_Z: constant polynomial");
  const auto d = static_cast<std::int64_t>(f.degree());
  Integer r = resultant(f, f.derivative());
  auto [q, rem] = Integer::divmod(r, f.leading());
  if (!rem.is_zero()) throw InternalError("discriminant_Z: resultant not divisible by leading coefficient");
  return ((d * (d - 1) / 2) % 2 == 0) ? q : -q;
}

Integer disc_formula(int n) {
  if (n < 2) throw DomainError("disc_formula: n must be >= 2");
  Integer nn = Integer::pow(Integer(n), static_cast<unsigned>(n));
  Integer other = Integer::pow(Integer(1 - n), static_cast<unsigned>(n - 1));
  Integer v = nn - other;
  const std::int64_t e = static_cast<std::int64_t>(n - 1) * (n - 2) / 2;
  return e % 2 == 0 ? v : -v;
}

SquarefreeVerdict squarefree_witness(const Integer& d, std::uint32_t bound) {
  if (d.is_zero()) throw DomainError("squarefree_witness: zero");
  SquarefreeVerdict v;
  v.bound = bound;
  for (std::uint32_t q : arith::primes_up_to(bound)) {
    const std::uint64_t q2 = static_cast<std::uint64_t>(q) * q;
    if (d.mod_u64(q2) == 0) {
      v.square_factor = q;
      break;
    }
  }
  return v;
}

namespace {

int sign_at_pos_inf(const PolyZ& p) { return p.leading().sign(); }
int sign_at_neg_inf(const PolyZ& p) { return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign(); }

// A positive rational multiple of the remainder of a modulo b.
PolyZ positive_scaled_remainder(const PolyZ& a, const PolyZ& b) {
  std::vector<Integer> r = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  const Integer& lb = b.leading();
  const Integer lb_abs = lb.abs();
  const int lb_sign = lb.sign();
  while (r.size() > db && r.size() >= 1) {
    const std::size_t top = r.size() - 1;
    if (r[top].is_zero()) {
      r.pop_back();
      continue;
    }
    Integer lr = r[top];
    if (lb_sign < 0) lr = -lr;
    for (auto& c : r) c *= lb_abs;
    const std::size_t shift = top - db;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * b.coeff(j);
    r.pop_back();
  }
  PolyZ rem(std::move(r));
  if (rem.is_zero()) return rem;
  const Integer g = rem.content();
  std::vector<Integer> reduced = rem.coefficients();
  for (auto& c : reduced) c /= g;
  return PolyZ(std::move(reduced));
}

}  // namespace

int real_root_count(const PolyZ& f) {
  if (f.is_zero()) throw DomainError("real_root_count: zero polynomial");
  if (f.degree() == 0) return 0;
  std::vector<PolyZ> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    PolyZ r = positive_scaled_remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(PolyZ() - r);
  }
  if (seq.back().degree() > 0) throw DomainError("real_root_count: polynomial is not squarefree");
  auto variations = [&](auto sign_fn) {
    int count = 0;
    int last = 0;
    for (const auto& s : seq) {
      const int v = sign_fn(s);
      if (v == 0) continue;
      if (last != 0 && v != last) ++count;
      last = v;
    }
    return count;
  };
  return variations(sign_at_neg_inf) - variations(sign_at_pos_inf);
}

}  // namespace frobkit::poly

namespace frobkit::poly {

Report verify_discriminants(int nmax, int squarefree_nmax, std::uint32_t bound) {
  Report rep("disc");
  int bad = 0;
  int first = 0;
  for (int n = 2; n <= nmax; ++n) {
    if (discriminant_Z(x_pow_minus_x_minus_one(n)) != disc_formula(n) && bad++ == 0) first = n;
  }
  rep.add("disc.formula", "disc(X^n - X - 1) = closed form, 2 <= n <= " + std::to_string(nmax),
          bad == 0 ? "all agree" : std::to_string(bad) + " differ, first n=" + std::to_string(first), "all agree",
          bad == 0);
  rep.expect_eq("disc.f5", "disc(f5)", discriminant_Z(x_pow_minus_x_minus_one(5)).to_string(), "2869");
  rep.expect_eq("disc.f5_factors", "19 * 151", std::to_string(19 * 151), "2869");
  std::string hits;
  for (int n = 2; n <= squarefree_nmax; ++n) {
    const auto w = squarefree_witness(disc_formula(n), bound);
    if (w.square_factor) hits += (hits.empty() ? "" : ", ") + std::to_string(n) + ":" + std::to_string(*w.square_factor);
  }
  rep.add("disc.squarefree", "no q^2 | disc for q <= " + std::to_string(bound) + ", n <= " + std::to_string(squarefree_nmax),
          hits.empty() ? "none" : hits, "none", hits.empty());
  return rep;
}

}  // namespace frobkit::poly
