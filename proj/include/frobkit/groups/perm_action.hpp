#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "frobkit/groups/finite_group.hpp"
#include "frobkit/poly/cycle_type.hpp"

namespace frobkit::groups {

/// A permutation for each element index of a group, acting on 0..degree-1.
struct PermAction {
  std::size_t degree = 0;
  std::vector<std::vector<std::uint16_t>> perms;

  const std::vector<std::uint16_t>& of(int x) const { return perms[static_cast<std::size_t>(x)]; }
  poly::CycleType cycle_type(int x) const { return poly::CycleType::of_permutation(of(x)); }

  /// sigma(xy) = sigma(x) sigma(y) for each listed pair, where (sigma(x) sigma(y))(i) = sigma(x)(sigma(y)(i)).
  bool is_homomorphic_on(const FiniteGroup& g, std::span<const std::pair<int, int>> pairs) const;
  /// Elements acting trivially.
  Subset kernel() const;
  bool is_transitive() const;
};

}  // namespace frobkit::groups
