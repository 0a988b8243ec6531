#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "frobkit/groups/finite_group.hpp"

namespace frobkit::asai {

using Complex = std::complex<double>;
using groups::FiniteGroup;

inline constexpr double kDefaultTolerance = 1e-6;

/// Complex-valued function on the conjugacy classes of a group.
class ClassFunction {
 public:
  ClassFunction(std::shared_ptr<const FiniteGroup> g, std::vector<Complex> values, double tau = kDefaultTolerance);
  /// Evaluates fn on each class representative.
  static ClassFunction from_elements(std::shared_ptr<const FiniteGroup> g, const std::function<Complex(int)>& fn,
                                     double tau = kDefaultTolerance);
  static ClassFunction trivial(std::shared_ptr<const FiniteGroup> g, double tau = kDefaultTolerance);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  double tolerance() const { return tau_; }
  const std::vector<Complex>& values() const { return values_; }
  Complex at_class(int k) const { return values_[static_cast<std::size_t>(k)]; }
  /// Value at an element index.
  Complex operator()(int x) const { return at_class(group_->class_of(x)); }
  Complex degree() const { return (*this)(group_->identity()); }

  /// Largest componentwise deviation; throws DomainError for different groups.
  double max_deviation(const ClassFunction& other) const;
  bool approx_equal(const ClassFunction& other) const { return max_deviation(other) <= tau_; }

  ClassFunction conj() const;
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Complex> values_;
  double tau_;
};

/// (1/|G|) sum_g a(g) conj(b(g)). Throws DomainError for different groups.
Complex inner_product(const ClassFunction& a, const ClassFunction& b);

/// Nearest-integer rendering when within tau of one, otherwise "x+yi" with 6 significant digits.
std::string format_complex(Complex z, double tau = kDefaultTolerance);

}  // namespace frobkit::asai
