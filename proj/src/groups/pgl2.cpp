#include "frobkit/groups/pgl2.hpp"

#include <algorithm>

#include "frobkit/errors.hpp"

namespace frobkit::groups {

namespace {

struct ClassInfo {
  S5Class cls;
  std::string_view label;
  std::vector<int> five_type;
  int size;
  ProjectiveData proj;
};

const std::vector<ClassInfo>& class_info() {
  static const std::vector<ClassInfo> kInfo = {
      {S5Class::kIdentity, "(1)", {1, 1, 1, 1, 1}, 1, {1, true}},
      {S5Class::kFiveCycle, "(1,3,5,4,2)", {5}, 24, {5, true}},
      {S5Class::kDoubleTransposition, "(2,5)(3,4)", {2, 2, 1}, 15, {2, true}},
      {S5Class::kTransposition, "(1,4)", {2, 1, 1, 1}, 10, {2, false}},
      {S5Class::kThreeCycle, "(1,4,5)", {3, 1, 1}, 20, {3, true}},
      {S5Class::kSixType, "(1,5)(2,3,4)", {3, 2}, 20, {6, false}},
      {S5Class::kFourCycle, "(1,2,5,3)", {4, 1}, 30, {4, false}},
  };
  return kInfo;
}

const ClassInfo& info(S5Class c) { return class_info()[static_cast<std::size_t>(c)]; }

}  // namespace

std::string_view label(S5Class c) { return info(c).label; }

std::optional<S5Class> s5_class_from_label(std::string_view s) {
  for (const auto& i : class_info()) {
    if (i.label == s) return i.cls;
  }
  return std::nullopt;
}

poly::CycleType five_point_type(S5Class c) { return poly::CycleType(info(c).five_type); }

std::optional<S5Class> s5_class_from_five_point_type(const poly::CycleType& t) {
  for (const auto& i : class_info()) {
    if (poly::CycleType(i.five_type) == t) return i.cls;
  }
  return std::nullopt;
}

int s5_class_size(S5Class c) { return info(c).size; }
int theta_trace(S5Class c) { return five_point_type(c).fixed_points() - 1; }
int sgn(S5Class c) {
  int s = 1;
  for (int part : info(c).five_type) s *= (part % 2 == 0) ? -1 : 1;
  return s;
}

ProjectiveData projective_data(const Mat2& m) {
  if (m.det().is_zero()) throw DomainError("projective_data: singular matrix");
  ProjectiveData d;
  d.order = 1;
  Mat2 x = m;
  while (!x.is_scalar()) {
    x = x * m;
    ++d.order;
  }
  const F25 lead = !m.a.is_zero() ? m.a : m.b;
  const Mat2 n = lead.inverse() * m;
  for (const F25& e : {n.a, n.b, n.c, n.d}) {
    if (!e.in_prime_field()) throw DomainError("projective_data: not a scalar multiple of a matrix over F5");
  }
  const auto det = n.det().a().value();
  d.in_psl = det == 1 || det == 4;
  return d;
}

S5Class s5_class_of(const Mat2& m) {
  const ProjectiveData d = projective_data(m);
  for (const auto& i : class_info()) {
    if (i.proj == d) return i.cls;
  }
  throw InternalError("s5_class_of: no class for projective order " + std::to_string(d.order));
}

Mat2 unipotent_upper() { return {F25(1, 0), F25(1, 0), F25(0, 0), F25(1, 0)}; }
Mat2 unipotent_lower() { return {F25(1, 0), F25(0, 0), F25(1, 0), F25(1, 0)}; }
Mat2 w_matrix() {
  const F25 z = F25::zeta();
  return {F25::zero(), z, -z.inverse(), F25::zero()};
}
Mat2 w_prime_matrix() {
  const F25 z = F25::zeta();
  return {F25::zero(), z, z.inverse(), F25::zero()};
}
Mat2 scalar(int s) { return Mat2::scalar(F25(s, 0)); }

std::vector<Mat2> sl2_f5_generators() { return {unipotent_upper(), unipotent_lower()}; }

std::vector<Mat2> extension_generators(int r) {
  if (r != 1 && r != 2) throw DomainError("extension_generators: r must be 1 or 2");
  auto g = sl2_f5_generators();
  g.push_back(w_matrix());
  if (r == 2) g.push_back(scalar(2));
  return g;
}

GroupData build_extension(int r) { return GroupData::build(extension_generators(r)); }
GroupData build_sl2_f5() { return GroupData::build(sl2_f5_generators()); }

int p1_image(const Mat2& m, int point) {
  F25 u;
  F25 v;
  if (point == kInfinity) {
    u = m.a;
    v = m.c;
  } else {
    const F25 x(point, 0);
    u = m.a * x + m.b;
    v = m.c * x + m.d;
  }
  if (v.is_zero()) return kInfinity;
  const F25 r = u * v.inverse();
  if (!r.in_prime_field()) throw DomainError("p1_image: matrix does not preserve P^1(F5)");
  return static_cast<int>(r.a().value());
}

PermAction p1_action(const GroupData& g) {
  PermAction a;
  a.degree = 6;
  a.perms.reserve(g.size());
  for (const auto& m : g.elements()) {
    std::vector<std::uint16_t> p(6);
    for (int i = 0; i < 6; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(p1_image(m, i));
    a.perms.push_back(std::move(p));
  }
  return a;
}

}  // namespace frobkit::groups
