#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "frobkit/errors.hpp"
#include "frobkit/groups/finite_group.hpp"
#include "frobkit/groups/mat2.hpp"

namespace frobkit::groups {

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// A finite group of invertible 2x2 matrices. Elements are indexed in
/// increasing order of their encoding.
template <class F>
class MatrixGroup {
 public:
  using Mat = Mat2T<F>;

  /// Closure of the generators under multiplication. Throws DomainError for a
  /// singular generator or when the closure exceeds cap elements.
  static MatrixGroup build(std::vector<Mat> generators, std::size_t cap = kDefaultClosureCap) {
    for (const auto& g : generators) {
      if (g.det().is_zero()) throw DomainError("build_group: singular generator " + g.to_string());
    }
    std::unordered_map<std::uint32_t, Mat> seen;
    std::deque<Mat> queue;
    seen.emplace(Mat::identity().encode(), Mat::identity());
    queue.push_back(Mat::identity());
    while (!queue.empty()) {
      const Mat x = queue.front();
      queue.pop_front();
      for (const auto& g : generators) {
        const Mat y = x * g;
        if (seen.emplace(y.encode(), y).second) {
          if (seen.size() > cap) {
            throw DomainError("build_group: closure exceeds cap of " + std::to_string(cap) + " elements");
          }
          queue.push_back(y);
        }
      }
    }
    MatrixGroup out;
    out.generators_ = std::move(generators);
    out.elements_.reserve(seen.size());
    for (const auto& kv : seen) out.elements_.push_back(kv.second);
    std::sort(out.elements_.begin(), out.elements_.end(),
              [](const Mat& x, const Mat& y) { return x.encode() < y.encode(); });
    out.finish();
    return out;
  }

  const FiniteGroup& group() const { return *group_; }
  /// Shared handle, for objects that must keep the group alive.
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Mat>& elements() const { return elements_; }
  const Mat& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<Mat>& generators() const { return generators_; }

  /// Index of m, or -1 when m is not a member.
  int index_of(const Mat& m) const {
    auto it = index_.find(m.encode());
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(const Mat& m) const { return index_of(m) >= 0; }
  int require_index(const Mat& m) const {
    const int i = index_of(m);
    if (i < 0) throw DomainError("matrix " + m.to_string() + " is not in the group");
    return i;
  }

  /// Subgroup generated by the given members.
  Subset subgroup(const std::vector<Mat>& gens) const {
    std::vector<int> idx;
    for (const auto& g : gens) idx.push_back(require_index(g));
    return group_->closure(idx);
  }

  /// The subgroup on the given members as a group in its own right.
  /// Throws DomainError if s is not closed under multiplication.
  MatrixGroup restrict_to(const Subset& s) const {
    MatrixGroup out;
    for (int x : s) out.elements_.push_back(element(x));
    std::sort(out.elements_.begin(), out.elements_.end(),
              [](const Mat& x, const Mat& y) { return x.encode() < y.encode(); });
    out.elements_.erase(std::unique(out.elements_.begin(), out.elements_.end()), out.elements_.end());
    out.finish();
    // Greedy generating set in element order.
    std::vector<int> gens;
    std::vector<char> covered(out.size(), 0);
    covered[static_cast<std::size_t>(out.group_->identity())] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (covered[i] != 0) continue;
      gens.push_back(static_cast<int>(i));
      for (int y : out.group_->closure(gens)) covered[static_cast<std::size_t>(y)] = 1;
    }
    for (int i : gens) out.generators_.push_back(out.element(i));
    return out;
  }

 private:
  void finish() {
    const std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i].encode(), static_cast<int>(i));
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto it = index_.find((elements_[i] * elements_[j]).encode());
        if (it == index_.end()) throw DomainError("matrix group: element set is not closed");
        table[i * n + j] = static_cast<std::uint16_t>(it->second);
      }
    }
    std::vector<std::uint64_t> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = elements_[i].trace().lex_key();
    group_ = std::make_shared<const FiniteGroup>(n, std::move(table), keys);
  }

  std::vector<Mat> generators_;
  std::vector<Mat> elements_;
  std::unordered_map<std::uint32_t, int> index_;
  std::shared_ptr<const FiniteGroup> group_;
};

}  // namespace frobkit::groups
