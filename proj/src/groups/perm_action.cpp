#include "frobkit/groups/perm_action.hpp"

#include <algorithm>

namespace frobkit::groups {

bool PermAction::is_homomorphic_on(const FiniteGroup& g, std::span<const std::pair<int, int>> pairs) const {
  for (const auto& [x, y] : pairs) {
    const auto& px = of(x);
    const auto& py = of(y);
    const auto& pxy = of(g.mul(x, y));
    for (std::size_t i = 0; i < degree; ++i) {
      if (pxy[i] != px[py[i]]) return false;
    }
  }
  return true;
}

Subset PermAction::kernel() const {
  Subset k;
  for (std::size_t x = 0; x < perms.size(); ++x) {
    bool trivial = true;
    for (std::size_t i = 0; i < degree && trivial; ++i) trivial = perms[x][i] == i;
    if (trivial) k.push_back(static_cast<int>(x));
  }
  return k;
}

bool PermAction::is_transitive() const {
  if (degree == 0) return true;
  std::vector<char> seen(degree, 0);
  std::vector<std::uint16_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (const auto& p : perms) {
      if (seen[p[i]] == 0) {
        seen[p[i]] = 1;
        stack.push_back(p[i]);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace frobkit::groups
