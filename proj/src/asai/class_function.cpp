#include "frobkit/asai/class_function.hpp"

#include <cmath>
#include <cstdio>

#include "frobkit/errors.hpp"

namespace frobkit::asai {

ClassFunction::ClassFunction(std::shared_ptr<const FiniteGroup> g, std::vector<Complex> values, double tau)
    : group_(std::move(g)), values_(std::move(values)), tau_(tau) {
  if (!group_) throw DomainError("ClassFunction: null group");
  if (values_.size() != group_->num_classes()) throw DomainError("ClassFunction: one value per class required");
}

ClassFunction ClassFunction::from_elements(std::shared_ptr<const FiniteGroup> g, const std::function<Complex(int)>& fn,
                                           double tau) {
  std::vector<Complex> v;
  v.reserve(g->num_classes());
  for (std::size_t k = 0; k < g->num_classes(); ++k) v.push_back(fn(g->class_rep(static_cast<int>(k))));
  return ClassFunction(std::move(g), std::move(v), tau);
}

ClassFunction ClassFunction::trivial(std::shared_ptr<const FiniteGroup> g, double tau) {
  const std::size_t n = g->num_classes();
  return ClassFunction(std::move(g), std::vector<Complex>(n, Complex(1.0, 0.0)), tau);
}

namespace {

void require_same(const ClassFunction& a, const ClassFunction& b) {
  if (a.group_ptr() != b.group_ptr()) throw DomainError("class functions live on different groups");
}

}  // namespace

double ClassFunction::max_deviation(const ClassFunction& other) const {
  require_same(*this, other);
  double m = 0;
  for (std::size_t k = 0; k < values_.size(); ++k) m = std::max(m, std::abs(values_[k] - other.values_[k]));
  return m;
}

ClassFunction ClassFunction::conj() const {
  std::vector<Complex> v;
  for (const auto& z : values_) v.push_back(std::conj(z));
  return ClassFunction(group_, std::move(v), tau_);
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same(a, b);
  std::vector<Complex> v(a.values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.values_[k] * b.values_[k];
  return ClassFunction(a.group_, std::move(v), a.tau_);
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same(a, b);
  std::vector<Complex> v(a.values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.values_[k] + b.values_[k];
  return ClassFunction(a.group_, std::move(v), a.tau_);
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  require_same(a, b);
  std::vector<Complex> v(a.values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.values_[k] - b.values_[k];
  return ClassFunction(a.group_, std::move(v), a.tau_);
}

Complex inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same(a, b);
  const FiniteGroup& g = a.group();
  Complex s = 0;
  for (std::size_t k = 0; k < g.num_classes(); ++k) {
    s += static_cast<double>(g.class_size(static_cast<int>(k))) * a.at_class(static_cast<int>(k)) *
         std::conj(b.at_class(static_cast<int>(k)));
  }
  return s / static_cast<double>(g.size());
}

std::string format_complex(Complex z, double tau) {
  const double re = std::round(z.real());
  if (std::abs(z.imag()) <= tau && std::abs(z.real() - re) <= tau) {
    return std::to_string(static_cast<long long>(re));
  }
  char buf[64];
  if (std::abs(z.imag()) <= tau) {
    std::snprintf(buf, sizeof buf, "%.6g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", std::abs(z.real()) <= tau ? 0.0 : z.real(), z.imag());
  }
  return buf;
}

}  // namespace frobkit::asai
