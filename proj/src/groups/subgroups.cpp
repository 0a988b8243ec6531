#include "frobkit/groups/subgroups.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <set>

#include "frobkit/errors.hpp"

namespace frobkit::groups {

H80Data find_H80(const GroupData& g) {
  const FiniteGroup& G = g.group();
  const PermAction a = p1_action(g);
  std::array<Subset, 6> stab;
  for (std::size_t x = 0; x < G.size(); ++x) {
    for (int i = 0; i < 6; ++i) {
      if (a.of(static_cast<int>(x))[static_cast<std::size_t>(i)] == i) {
        stab[static_cast<std::size_t>(i)].push_back(static_cast<int>(x));
      }
    }
  }
  H80Data out;
  out.h = stab[kInfinity];
  if (out.h.size() != 80) throw InternalError("find_H80: stabilizer has order " + std::to_string(out.h.size()));

  out.stabilizers_conjugate = true;
  for (int i = 0; i < 6; ++i) {
    bool found = false;
    for (std::size_t x = 0; x < G.size() && !found; ++x) {
      found = G.conjugate_subset(static_cast<int>(x), out.h) == stab[static_cast<std::size_t>(i)];
    }
    out.stabilizers_conjugate = out.stabilizers_conjugate && found;
  }

  std::vector<int> fives;
  for (int x : out.h) {
    if (G.order_of(x) == 5) fives.push_back(x);
  }
  if (fives.size() != 4) throw InternalError("find_H80: expected one subgroup of order 5");
  out.u = G.closure(fives);
  if (out.u.size() != 5) throw InternalError("find_H80: order-5 elements do not form a subgroup");
  out.quotient = G.quotient_fingerprint(out.h, out.u);
  return out;
}

Fingerprint c8_x_c2_fingerprint() {
  Fingerprint f;
  f.order = 16;
  f.order_counts = {{1, 1}, {2, 3}, {4, 4}, {8, 8}};
  f.abelian = true;
  f.center_size = 16;
  return f;
}

Fingerprint d5_fingerprint() {
  Fingerprint f;
  f.order = 10;
  f.order_counts = {{1, 1}, {2, 5}, {5, 4}};
  f.abelian = false;
  f.center_size = 1;
  return f;
}

std::array<Subset, 2> normal_order10_subgroups(const GroupData& g, const H80Data& h) {
  const FiniteGroup& G = g.group();
  // Every subgroup of order 10 is generated by its normal 5-Sylow, which is U,
  // and one element of order 2.
  std::set<Subset> found;
  for (int t : h.h) {
    if (G.order_of(t) != 2) continue;
    std::vector<int> gens(h.u.begin(), h.u.end());
    gens.push_back(t);
    Subset n = G.closure(gens);
    if (n.size() != 10) continue;
    bool normal = true;
    const auto in = membership(n, G.size());
    for (int x : h.h) {
      for (int y : n) {
        if (in[static_cast<std::size_t>(G.conjugate(x, y))] == 0) {
          normal = false;
          break;
        }
      }
      if (!normal) break;
    }
    if (!normal) continue;
    const Fingerprint q = G.quotient_fingerprint(h.h, n);
    if (q.order == 8 && q.order_counts.count(8) == 1) found.insert(std::move(n));
  }
  if (found.size() != 2) {
    throw InternalError("normal_order10_subgroups: found " + std::to_string(found.size()) + " subgroups");
  }
  std::vector<Subset> v(found.begin(), found.end());
  std::sort(v.begin(), v.end(), [](const Subset& a, const Subset& b) { return a[1] < b[1]; });
  return {v[0], v[1]};
}

PermAction coset_action(const FiniteGroup& g, const Subset& n) {
  const auto cosets = g.left_cosets(n);
  std::vector<int> coset_of(g.size(), -1);
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    for (int y : cosets[c]) coset_of[static_cast<std::size_t>(y)] = static_cast<int>(c);
  }
  PermAction a;
  a.degree = cosets.size();
  a.perms.reserve(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    std::vector<std::uint16_t> p(a.degree);
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      p[c] = static_cast<std::uint16_t>(coset_of[static_cast<std::size_t>(g.mul(static_cast<int>(x), cosets[c].front()))]);
    }
    a.perms.push_back(std::move(p));
  }
  if (a.kernel().size() != 1) throw VerificationFailure("coset_action: action is not faithful");
  return a;
}

std::vector<Index2Kernel> index2_kernels(const GroupData& g) {
  const FiniteGroup& G = g.group();
  std::vector<int> gens;
  for (const auto& m : g.generators()) gens.push_back(g.require_index(m));

  // A map to C2 defined on generators extends to a homomorphism iff it is
  // consistent along every edge of the Cayley graph.
  std::vector<Subset> kernels;
  const std::size_t m = gens.size();
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<int> phi(G.size(), -1);
    phi[static_cast<std::size_t>(G.identity())] = 0;
    std::vector<int> queue{G.identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      for (std::size_t k = 0; k < m && ok; ++k) {
        const int y = G.mul(queue[i], gens[k]);
        const int v = phi[static_cast<std::size_t>(queue[i])] ^ static_cast<int>((mask >> k) & 1U);
        if (phi[static_cast<std::size_t>(y)] < 0) {
          phi[static_cast<std::size_t>(y)] = v;
          queue.push_back(y);
        } else if (phi[static_cast<std::size_t>(y)] != v) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    Subset ker;
    for (std::size_t x = 0; x < G.size(); ++x) {
      if (phi[x] == 0) ker.push_back(static_cast<int>(x));
    }
    kernels.push_back(std::move(ker));
  }
  if (kernels.size() != 3) {
    throw VerificationFailure("index2_kernels: found " + std::to_string(kernels.size()) + " surjections to C2");
  }

  auto det_sign = [&](int x) { return g.element(x).det().a().value() == 1 ? 1 : -1; };
  auto sgn_sign = [&](int x) { return sgn(s5_class_of(g.element(x))); };
  std::vector<Index2Kernel> out;
  for (const auto& [name, fn] : std::vector<std::pair<std::string, std::function<int(int)>>>{
           {"sgn", sgn_sign}, {"det", det_sign}, {"det*sgn", [&](int x) { return det_sign(x) * sgn_sign(x); }}}) {
    Subset ker;
    for (std::size_t x = 0; x < G.size(); ++x) {
      if (fn(static_cast<int>(x)) == 1) ker.push_back(static_cast<int>(x));
    }
    if (std::find(kernels.begin(), kernels.end(), ker) == kernels.end()) {
      throw VerificationFailure("index2_kernels: kernel of " + name + " is not among the index-2 subgroups");
    }
    out.push_back({name, std::move(ker)});
  }
  return out;
}

}  // namespace frobkit::groups
