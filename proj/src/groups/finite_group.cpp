#include "frobkit/groups/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "frobkit/errors.hpp"

namespace frobkit::groups {

std::string Fingerprint::to_string() const {
  std::string s = "order " + std::to_string(order) + ", orders {";
  bool first = true;
  for (const auto& [o, c] : order_counts) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(o) + ":" + std::to_string(c);
  }
  s += "}, " + std::string(abelian ? "abelian" : "non-abelian") + ", center " + std::to_string(center_size);
  return s;
}

std::vector<char> membership(const Subset& s, std::size_t n) {
  std::vector<char> m(n, 0);
  for (int x : s) m[static_cast<std::size_t>(x)] = 1;
  return m;
}

FiniteGroup::FiniteGroup(std::size_t n, std::vector<std::uint16_t> table,
                         const std::vector<std::uint64_t>& class_keys)
    : n_(n), table_(std::move(table)) {
  if (n == 0 || table_.size() != n * n || class_keys.size() != n) {
    throw InternalError("FiniteGroup: inconsistent table dimensions");
  }
  identity_ = -1;
  for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mul(static_cast<int>(e), static_cast<int>(x)) == static_cast<int>(x);
    if (ok) identity_ = static_cast<int>(e);
  }
  if (identity_ < 0) throw InternalError("FiniteGroup: no identity");

  inverse_.assign(n, -1);
  order_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mul(static_cast<int>(x), static_cast<int>(y)) == identity_) {
        inverse_[x] = static_cast<int>(y);
        break;
      }
    }
    if (inverse_[x] < 0) throw InternalError("FiniteGroup: element without inverse");
    int k = 1;
    int p = static_cast<int>(x);
    while (p != identity_) {
      p = mul(p, static_cast<int>(x));
      ++k;
    }
    order_[x] = k;
  }

  class_of_.assign(n, -1);
  std::vector<Subset> raw;
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] >= 0) continue;
    Subset orbit;
    for (std::size_t g = 0; g < n; ++g) orbit.push_back(conjugate(static_cast<int>(g), static_cast<int>(x)));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (int y : orbit) class_of_[static_cast<std::size_t>(y)] = 0;
    raw.push_back(std::move(orbit));
  }
  std::sort(raw.begin(), raw.end(), [&](const Subset& a, const Subset& b) {
    const auto ka = std::make_tuple(order_of(a.front()), class_keys[static_cast<std::size_t>(a.front())], a.front());
    const auto kb = std::make_tuple(order_of(b.front()), class_keys[static_cast<std::size_t>(b.front())], b.front());
    return ka < kb;
  });
  classes_ = std::move(raw);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    for (int y : classes_[k]) class_of_[static_cast<std::size_t>(y)] = static_cast<int>(k);
  }
}

int FiniteGroup::power(int x, std::int64_t e) const {
  const int o = order_of(x);
  std::int64_t r = e % o;
  if (r < 0) r += o;
  int out = identity_;
  for (std::int64_t i = 0; i < r; ++i) out = mul(out, x);
  return out;
}

Subset FiniteGroup::closure(std::span<const int> gens) const {
  std::vector<char> in(n_, 0);
  Subset out{identity_};
  in[static_cast<std::size_t>(identity_)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int g : gens) {
      const int y = mul(out[i], g);
      if (in[static_cast<std::size_t>(y)] == 0) {
        in[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_subgroup(const Subset& s) const {
  if (s.empty()) return false;
  const auto in = membership(s, n_);
  for (int x : s) {
    for (int y : s) {
      if (in[static_cast<std::size_t>(mul(x, inv(y)))] == 0) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_normal(const Subset& s) const {
  const auto in = membership(s, n_);
  for (std::size_t g = 0; g < n_; ++g) {
    for (int x : s) {
      if (in[static_cast<std::size_t>(conjugate(static_cast<int>(g), x))] == 0) return false;
    }
  }
  return true;
}

Subset FiniteGroup::center_of(const Subset& s) const {
  Subset z;
  for (int x : s) {
    bool central = true;
    for (int y : s) {
      if (mul(x, y) != mul(y, x)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return z;
}

Subset FiniteGroup::center() const {
  Subset all(n_);
  std::iota(all.begin(), all.end(), 0);
  return center_of(all);
}

Subset FiniteGroup::conjugate_subset(int g, const Subset& s) const {
  Subset out;
  out.reserve(s.size());
  for (int x : s) out.push_back(conjugate(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> FiniteGroup::left_cosets(const Subset& n) const {
  std::vector<char> seen(n_, 0);
  std::vector<Subset> out;
  for (std::size_t x = 0; x < n_; ++x) {
    if (seen[x] != 0) continue;
    Subset c;
    for (int y : n) c.push_back(mul(static_cast<int>(x), y));
    std::sort(c.begin(), c.end());
    for (int y : c) seen[static_cast<std::size_t>(y)] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

int FiniteGroup::order_modulo(int x, const Subset& n) const {
  const auto in = membership(n, n_);
  int p = x;
  for (int k = 1;; ++k) {
    if (in[static_cast<std::size_t>(p)] != 0) return k;
    p = mul(p, x);
  }
}

Fingerprint FiniteGroup::fingerprint(const Subset& s) const {
  Fingerprint f;
  f.order = s.size();
  for (int x : s) ++f.order_counts[order_of(x)];
  f.center_size = center_of(s).size();
  f.abelian = f.center_size == s.size();
  return f;
}

Fingerprint FiniteGroup::quotient_fingerprint(const Subset& h, const Subset& n) const {
  const auto in = membership(n, n_);
  std::vector<Subset> cosets;
  std::vector<char> seen(n_, 0);
  for (int x : h) {
    if (seen[static_cast<std::size_t>(x)] != 0) continue;
    Subset c;
    for (int y : n) c.push_back(mul(x, y));
    for (int y : c) seen[static_cast<std::size_t>(y)] = 1;
    cosets.push_back(std::move(c));
  }
  auto commute_mod_n = [&](int x, int y) {
    return in[static_cast<std::size_t>(mul(mul(x, y), inv(mul(y, x))))] != 0;
  };
  Fingerprint f;
  f.order = cosets.size();
  for (const auto& c : cosets) {
    ++f.order_counts[order_modulo(c.front(), n)];
    bool central = true;
    for (const auto& d : cosets) {
      if (!commute_mod_n(c.front(), d.front())) {
        central = false;
        break;
      }
    }
    if (central) ++f.center_size;
  }
  f.abelian = f.center_size == f.order;
  return f;
}

}  // namespace frobkit::groups
