#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace frobkit::groups {

/// Sorted list of element indices.
using Subset = std::vector<int>;

/// Isomorphism invariants used in place of full isomorphism tests.
struct Fingerprint {
  std::size_t order = 0;
  std::map<int, int> order_counts;  // element order -> number of elements
  bool abelian = false;
  std::size_t center_size = 0;

  std::string to_string() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// A finite group given by its multiplication table on indices 0..n-1, with
/// the conjugacy-class partition computed once at construction.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// table[i * n + j] is the index of e_i e_j. Classes are ordered by
  /// (element order, class_keys[rep], rep) with rep the smallest member.
  FiniteGroup(std::size_t n, std::vector<std::uint16_t> table, const std::vector<std::uint64_t>& class_keys);

  std::size_t size() const { return n_; }
  int identity() const { return identity_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)]; }
  int inv(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
  int power(int x, std::int64_t e) const;
  int order_of(int x) const { return order_[static_cast<std::size_t>(x)]; }
  /// g x g^-1.
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<Subset>& classes() const { return classes_; }
  int class_of(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  int class_rep(int k) const { return classes_[static_cast<std::size_t>(k)].front(); }
  std::size_t class_size(int k) const { return classes_[static_cast<std::size_t>(k)].size(); }
  int inverse_class(int k) const { return class_of(inv(class_rep(k))); }

  /// Subgroup generated by gens.
  Subset closure(std::span<const int> gens) const;
  bool is_subgroup(const Subset& s) const;
  bool is_normal(const Subset& s) const;
  Subset center() const;
  /// Elements of s commuting with every element of s.
  Subset center_of(const Subset& s) const;
  /// Conjugate g s g^-1, sorted.
  Subset conjugate_subset(int g, const Subset& s) const;
  /// Left cosets x N, ordered by smallest member.
  std::vector<Subset> left_cosets(const Subset& n) const;
  /// Smallest k >= 1 with x^k in n.
  int order_modulo(int x, const Subset& n) const;

  Fingerprint fingerprint(const Subset& s) const;
  /// Invariants of h / n for n normal in h.
  Fingerprint quotient_fingerprint(const Subset& h, const Subset& n) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<int> inverse_;
  std::vector<int> order_;
  int identity_ = 0;
  std::vector<Subset> classes_;
  std::vector<int> class_of_;
};

/// Membership mask for a subset of a group of the given size.
std::vector<char> membership(const Subset& s, std::size_t n);

}  // namespace frobkit::groups
