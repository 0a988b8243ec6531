#include "frobkit/poly/poly_fp.hpp"

#include <algorithm>

#include "frobkit/errors.hpp"

namespace frobkit::poly {

using arith::inv_mod;
using arith::mul_mod;

namespace {

// Largest number of products (p-1)^2 that fit in a 64-bit accumulator.
std::size_t lazy_terms(std::uint64_t p) {
  const unsigned __int128 sq = static_cast<unsigned __int128>(p - 1) * (p - 1);
  if (sq == 0) return SIZE_MAX;
  const unsigned __int128 cap = static_cast<unsigned __int128>(UINT64_MAX) / sq;
  return cap > SIZE_MAX ? SIZE_MAX : static_cast<std::size_t>(cap);
}

}  // namespace

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

PolyFp PolyFp::monomial(std::uint64_t p, std::size_t degree, std::uint64_t c) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = c;
  return PolyFp(p, std::move(v));
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

arith::Residue PolyFp::coeff(std::size_t i) const {
  return arith::Residue{i < c_.size() ? c_[i] : 0, p_};
}

PolyFp PolyFp::derivative() const {
  std::vector<std::uint64_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mul_mod(c_[i], i % p_, p_));
  return PolyFp(p_, std::move(d));
}

PolyFp PolyFp::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t inv = inv_mod(c_.back(), p_);
  std::vector<std::uint64_t> v = c_;
  for (auto& c : v) c = mul_mod(c, inv, p_);
  return PolyFp(p_, std::move(v));
}

std::uint64_t PolyFp::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = (mul_mod(acc, x, p_) + c_[i]) % p_;
  return acc;
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + b.c_[i]) % a.p_;
  return PolyFp(a.p_, std::move(v));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + a.p_ - b.c_[i]) % a.p_;
  return PolyFp(a.p_, std::move(v));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  if (a.c_.empty() || b.c_.empty()) return PolyFp(a.p_);
  const std::uint64_t p = a.p_;
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  std::vector<std::uint64_t> v(n, 0);
  if (std::min(a.c_.size(), b.c_.size()) <= lazy_terms(p)) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    for (auto& c : v) c %= p;
  } else {
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + mul_mod(a.c_[i], b.c_[j], p)) % p;
    }
  }
  return PolyFp(p, std::move(v));
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw DomainError("PolyFp: division by zero polynomial");
  const std::uint64_t p = a.p_;
  if (a.degree() < b.degree()) return {PolyFp(p), a};
  std::vector<std::uint64_t> r = a.c_;
  const std::size_t db = b.c_.size() - 1;
  const std::uint64_t inv = inv_mod(b.c_.back(), p);
  std::vector<std::uint64_t> q(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const std::uint64_t coef = mul_mod(r[k], inv, p);
    q[k - db] = coef;
    if (coef == 0) continue;
    const std::uint64_t neg = p - coef;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] = (r[k - db + j] + mul_mod(neg, b.c_[j], p)) % p;
    }
  }
  r.resize(db);
  return {PolyFp(p, std::move(q)), PolyFp(p, std::move(r))};
}

PolyFp PolyFp::gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyFp PolyFp::pow_mod(const PolyFp& base, std::uint64_t e, const PolyFp& m) {
  PolyFp result = PolyFp(m.p_, {1}) % m;
  PolyFp b = base % m;
  while (e != 0) {
    if ((e & 1U) != 0) result = (result * b) % m;
    e >>= 1;
    if (e != 0) b = (b * b) % m;
  }
  return result;
}

int count_roots_mod_p(const PolyFp& f) {
  if (f.is_zero()) throw DomainError("count_roots_mod_p: zero polynomial");
  if (f.degree() == 0) return 0;
  const std::uint64_t p = f.modulus();
  const PolyFp m = f.monic();
  const PolyFp x = PolyFp::monomial(p, 1);
  const PolyFp xp = PolyFp::pow_mod(x, p, m);
  return PolyFp::gcd(m, xp - x).degree();
}

bool is_squarefree(const PolyFp& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  return PolyFp::gcd(f, f.derivative()).degree() == 0;
}

namespace {

/// The p-power Frobenius as a linear map on F_p[X]/(f): row i holds X^(i p) mod f.
class FrobeniusMatrix {
 public:
  explicit FrobeniusMatrix(const PolyFp& f) : p_(f.modulus()), n_(static_cast<std::size_t>(f.degree())) {
    const PolyFp x = PolyFp::monomial(p_, 1);
    const PolyFp xp = PolyFp::pow_mod(x, p_, f);
    rows_.reserve(n_);
    PolyFp cur = PolyFp(p_, {1});
    for (std::size_t i = 0; i < n_; ++i) {
      rows_.push_back(dense(cur));
      cur = (cur * xp) % f;
    }
    lazy_ = n_ <= lazy_terms(p_);
  }

  /// v(X) -> v(X)^p = v(X^p) mod f.
  PolyFp apply(const PolyFp& v) const {
    std::vector<std::uint64_t> out(n_, 0);
    const auto& vc = v.raw();
    if (lazy_) {
      for (std::size_t i = 0; i < vc.size(); ++i) {
        if (vc[i] == 0) continue;
        const auto& row = rows_[i];
        for (std::size_t j = 0; j < n_; ++j) out[j] += vc[i] * row[j];
      }
      for (auto& c : out) c %= p_;
    } else {
      for (std::size_t i = 0; i < vc.size(); ++i) {
        const auto& row = rows_[i];
        for (std::size_t j = 0; j < n_; ++j) out[j] = (out[j] + mul_mod(vc[i], row[j], p_)) % p_;
      }
    }
    return PolyFp(p_, std::move(out));
  }

 private:
  std::vector<std::uint64_t> dense(const PolyFp& v) const {
    std::vector<std::uint64_t> d(n_, 0);
    std::copy(v.raw().begin(), v.raw().end(), d.begin());
    return d;
  }

  std::uint64_t p_;
  std::size_t n_;
  bool lazy_ = false;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace

CycleType factorization_cycle_type(const PolyFp& f_in) {
  if (f_in.is_zero() || f_in.degree() < 1) {
    throw DomainError("factorization_cycle_type: need a polynomial of positive degree");
  }
  if (!is_squarefree(f_in)) {
    throw RamifiedError(f_in.modulus(), "polynomial is not squarefree mod " + std::to_string(f_in.modulus()));
  }
  const std::uint64_t p = f_in.modulus();
  const PolyFp f = f_in.monic();
  std::vector<int> parts;
  if (f.degree() == 1) return CycleType({1});

  const FrobeniusMatrix frob(f);
  const PolyFp x = PolyFp::monomial(p, 1);
  PolyFp rest = f;
  PolyFp h = x % f;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = frob.apply(h);  // X^(p^d) mod f
    PolyFp g = PolyFp::gcd(rest, h - x);
    if (g.degree() > 0) {
      parts.insert(parts.end(), static_cast<std::size_t>(g.degree() / d), d);
      rest = rest / g;
    }
  }
  if (rest.degree() > 0) parts.push_back(rest.degree());
  return CycleType(std::move(parts));
}

}  // namespace frobkit::poly
