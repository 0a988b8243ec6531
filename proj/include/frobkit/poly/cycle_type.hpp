#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frobkit::poly {

/// A partition of a finite degree: cycle lengths of a permutation, or the
/// degrees of the irreducible factors of a squarefree polynomial mod p.
/// Parts are kept in non-increasing order.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);

  /// Cycle type of a permutation given as an image array.
  static CycleType of_permutation(std::span<const std::uint16_t> perm);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  int count(int part) const;
  int fixed_points() const { return count(1); }

  /// Exponent notation, largest part first: "20^2 4^2", "3 1^2", "1^6".
  std::string to_string() const;
  /// Inverse of to_string; throws ParseError.
  static CycleType parse(const std::string& text);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace frobkit::poly
