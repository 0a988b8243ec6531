#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "frobkit/errors.hpp"
#include "frobkit/groups/subgroups.hpp"
#include "frobkit/groups/tables.hpp"

using namespace frobkit::groups;
using frobkit::arith::F25;
using frobkit::poly::CycleType;

namespace {

const GroupData& gt() {
  static const GroupData g = build_extension(2);
  return g;
}

// All of SL2(F5) by enumeration of 5^4 integer matrices.
std::vector<Mat2> brute_sl2() {
  std::vector<Mat2> out;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d)
          if (((a * d - b * c) % 5 + 5) % 5 == 1) out.push_back({F25(a, 0), F25(b, 0), F25(c, 0), F25(d, 0)});
  return out;
}

// Conjugacy classes by direct set orbits on matrices, independent of FiniteGroup.
std::size_t orbit_class_count(const std::vector<Mat2>& elems) {
  std::set<std::uint32_t> done;
  std::size_t classes = 0;
  for (const auto& x : elems) {
    if (done.count(x.encode()) != 0) continue;
    ++classes;
    for (const auto& g : elems) done.insert((g * x * g.inverse()).encode());
  }
  return classes;
}

}  // namespace

TEST_CASE("build_group orders") {
  const auto sl2 = build_sl2_f5();
  CHECK(sl2.size() == 120);
  CHECK(brute_sl2().size() == 120);
  for (const auto& m : brute_sl2()) REQUIRE(sl2.contains(m));
  CHECK(gt().size() == 480);
  CHECK(build_extension(1).size() == 240);
  CHECK(GroupData::build({Mat2::identity()}).size() == 1);
  CHECK(GroupData::build({}).size() == 1);
  CHECK_THROWS_AS(GroupData::build({scalar(0)}), frobkit::DomainError);
  CHECK_THROWS_AS(GroupData::build(extension_generators(2), 100), frobkit::DomainError);
  CHECK_THROWS_AS(extension_generators(3), frobkit::DomainError);
}

TEST_CASE("element ordering is lexicographic and closed") {
  const auto& g = gt();
  for (std::size_t i = 1; i < g.size(); ++i) {
    REQUIRE(g.element(static_cast<int>(i - 1)).encode() < g.element(static_cast<int>(i)).encode());
  }
  const auto& G = g.group();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int x = static_cast<int>(i);
    REQUIRE(G.mul(x, G.inv(x)) == G.identity());
    REQUIRE(g.element(G.inv(x)) == g.element(x).inverse());
  }
  CHECK(g.element(G.identity()) == Mat2::identity());
}

TEST_CASE("conjugacy_classes") {
  CHECK(GroupData::build({}).group().num_classes() == 1);
  const auto sl2 = build_sl2_f5();
  CHECK(sl2.group().num_classes() == 9);
  CHECK(orbit_class_count(sl2.elements()) == 9);
  const auto& G = gt().group();
  CHECK(G.num_classes() == orbit_class_count(gt().elements()));
  CHECK(build_extension(2).group().classes() == G.classes());

  std::size_t total = 0;
  for (std::size_t k = 0; k < G.num_classes(); ++k) {
    const auto& cls = G.classes()[k];
    total += cls.size();
    for (int x : cls) {
      REQUIRE(G.class_of(x) == static_cast<int>(k));
      REQUIRE(G.order_of(x) == G.order_of(cls.front()));
      REQUIRE(gt().element(x).trace() == gt().element(cls.front()).trace());
    }
    if (k > 0) REQUIRE(G.order_of(G.class_rep(static_cast<int>(k - 1))) <= G.order_of(G.class_rep(static_cast<int>(k))));
  }
  CHECK(total == 480);
}

TEST_CASE("center and quotient by the center") {
  const auto& g = gt();
  const auto z = g.group().center();
  std::set<std::uint32_t> zs;
  for (int x : z) zs.insert(g.element(x).encode());
  CHECK(zs == std::set<std::uint32_t>{scalar(1).encode(), scalar(2).encode(), scalar(3).encode(), scalar(4).encode()});
  CHECK(g.group().order_modulo(g.require_index(scalar(2)), {g.group().identity()}) == 4);
  const auto q = g.group().quotient_fingerprint(
      [&] {
        Subset all(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) all[i] = static_cast<int>(i);
        return all;
      }(),
      z);
  CHECK(q.order == 120);
  CHECK(q.center_size == 1);
  // S5 element-order distribution.
  CHECK(q.order_counts == std::map<int, int>{{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}});
}

TEST_CASE("projective_data and s5_class_of") {
  CHECK(projective_data(Mat2::identity()) == ProjectiveData{1, true});
  CHECK(projective_data(unipotent_upper()) == ProjectiveData{5, true});
  CHECK(projective_data(w_matrix()) == ProjectiveData{2, false});
  CHECK(s5_class_of(Mat2::identity()) == S5Class::kIdentity);
  CHECK(s5_class_of(unipotent_upper()) == S5Class::kFiveCycle);
  CHECK(s5_class_of(w_matrix()) == S5Class::kTransposition);
  CHECK(s5_class_of(scalar(2)) == S5Class::kIdentity);

  const auto& g = gt();
  const auto& G = g.group();
  std::map<S5Class, int> counts;
  for (std::size_t k = 0; k < G.num_classes(); ++k) {
    const S5Class c = s5_class_of(g.element(G.class_rep(static_cast<int>(k))));
    for (int x : G.classes()[k]) REQUIRE(s5_class_of(g.element(x)) == c);
    counts[c] += static_cast<int>(G.class_size(static_cast<int>(k)));
  }
  for (S5Class c : kAllS5Classes) CHECK(counts[c] == 4 * s5_class_size(c));
}

TEST_CASE("S5 class metadata") {
  int total = 0;
  std::set<CycleType> types;
  for (S5Class c : kAllS5Classes) {
    total += s5_class_size(c);
    types.insert(five_point_type(c));
    CHECK(s5_class_from_label(label(c)) == c);
    CHECK(s5_class_from_five_point_type(five_point_type(c)) == c);
    CHECK(five_point_type(c).total() == 5);
  }
  CHECK(total == 120);
  CHECK(types.size() == 7);
  CHECK(theta_trace(S5Class::kIdentity) == 4);
  CHECK(theta_trace(S5Class::kTransposition) == 2);
  CHECK(sgn(S5Class::kSixType) == -1);
  CHECK(sgn(S5Class::kThreeCycle) == 1);
}

TEST_CASE("p1_action") {
  const auto& g = gt();
  const auto a = p1_action(g);
  CHECK(a.cycle_type(g.require_index(Mat2::identity())) == CycleType({1, 1, 1, 1, 1, 1}));
  CHECK(a.cycle_type(g.require_index(unipotent_upper())) == CycleType({5, 1}));
  CHECK(a.of(g.require_index(unipotent_upper()))[kInfinity] == kInfinity);
  CHECK(a.cycle_type(g.require_index(w_matrix())) == CycleType({2, 2, 2}));
  CHECK(a.kernel().size() == 4);
  CHECK(a.is_transitive());

  std::vector<std::pair<int, int>> pairs;
  for (const auto& x : g.generators()) {
    for (const auto& y : g.generators()) pairs.emplace_back(g.require_index(x), g.require_index(y));
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) pairs.emplace_back(static_cast<int>(rng() % 480), static_cast<int>(rng() % 480));
  CHECK(a.is_homomorphic_on(g.group(), pairs));
}

TEST_CASE("six-point dictionary is bijective with the five-point types") {
  const auto dict = six_point_dictionary(gt());
  CHECK(dict.size() == 7);
  std::set<CycleType> six;
  for (const auto& [c, t] : dict) six.insert(t);
  CHECK(six.size() == 7);
  CHECK(dict.at(S5Class::kSixType) == CycleType({6}));
  CHECK(dict.at(S5Class::kDoubleTransposition) == CycleType({2, 2, 1, 1}));
  CHECK(dict.at(S5Class::kFiveCycle) == CycleType({5, 1}));
  CHECK(dict.at(S5Class::kTransposition) == CycleType({2, 2, 2}));
  CHECK(dict.at(S5Class::kThreeCycle) == CycleType({3, 3}));
  CHECK(dict.at(S5Class::kFourCycle) == CycleType({4, 1, 1}));
}

TEST_CASE("H80, U and H/U") {
  const auto& g = gt();
  const auto h = find_H80(g);
  CHECK(h.h.size() == 80);
  CHECK(g.group().is_subgroup(h.h));
  CHECK(h.stabilizers_conjugate);
  for (int x : h.h) REQUIRE(g.element(x).c.is_zero());
  CHECK(h.u.size() == 5);
  CHECK(std::binary_search(h.u.begin(), h.u.end(), g.require_index(unipotent_upper())));
  CHECK(h.quotient == c8_x_c2_fingerprint());
  CHECK(c8_x_c2_fingerprint().to_string() == "order 16, orders {1:1, 2:3, 4:4, 8:8}, abelian, center 16");
}

TEST_CASE("normal_order10_subgroups") {
  const auto& g = gt();
  const auto& G = g.group();
  const auto h = find_H80(g);
  const auto ns = normal_order10_subgroups(g, h);
  CHECK(ns[0] != ns[1]);
  const int minus_one = g.require_index(scalar(-1));
  for (const auto& n : ns) {
    CHECK(n.size() == 10);
    CHECK(G.fingerprint(n) == d5_fingerprint());
    CHECK(std::includes(n.begin(), n.end(), h.u.begin(), h.u.end()));
    CHECK_FALSE(std::binary_search(n.begin(), n.end(), minus_one));
    for (int z : G.center()) {
      if (z != G.identity()) CHECK_FALSE(std::binary_search(n.begin(), n.end(), z));
    }
  }
}

TEST_CASE("coset_action on 48 points") {
  const auto& g = gt();
  const auto& G = g.group();
  const auto h = find_H80(g);
  for (const auto& n : normal_order10_subgroups(g, h)) {
    const auto a = coset_action(G, n);
    CHECK(a.degree == 48);
    CHECK(a.is_transitive());
    CHECK(a.cycle_type(g.require_index(scalar(2))) == CycleType(std::vector<int>(12, 4)));
    CHECK(a.cycle_type(g.require_index(scalar(-1))) == CycleType(std::vector<int>(24, 2)));
    CHECK(a.cycle_type(G.identity()) == CycleType(std::vector<int>(48, 1)));
    std::vector<std::pair<int, int>> pairs;
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) pairs.emplace_back(static_cast<int>(rng() % 480), static_cast<int>(rng() % 480));
    CHECK(a.is_homomorphic_on(G, pairs));

    // Inverse classes share a type. Distinct S5 classes may also collide
    // (4^12 carries lifts of (1), (1,4) and (2,5)(3,4)), but inside a fibre
    // the S5 class and det fix tr^2.
    const auto t = class_cycletype_table(a, G);
    CHECK(t.by_class.size() == G.num_classes());
    for (std::size_t k = 0; k < G.num_classes(); ++k) {
      CHECK(t.by_class[k] == t.by_class[static_cast<std::size_t>(G.inverse_class(static_cast<int>(k)))]);
    }
    CHECK(t.inverse.at(CycleType(std::vector<int>(12, 4))).size() == 4);
    for (const auto& [ct, cls] : t.inverse) {
      std::map<std::pair<S5Class, std::uint32_t>, std::set<std::uint32_t>> tr_sq;
      for (int k : cls) {
        const Mat2& m = g.element(G.class_rep(k));
        tr_sq[{s5_class_of(m), m.det().code()}].insert((m.trace() * m.trace()).code());
      }
      for (const auto& [key, vals] : tr_sq) CHECK(vals.size() == 1);
    }
    const int c2 = G.class_of(g.require_index(scalar(2)));
    const int c3 = G.class_of(g.require_index(scalar(3)));
    const auto& fibre = t.inverse.at(CycleType(std::vector<int>(12, 4)));
    CHECK(std::count(fibre.begin(), fibre.end(), c2) == 1);
    CHECK(std::count(fibre.begin(), fibre.end(), c3) == 1);
  }
  // The action on cosets of H80 has -I in its kernel.
  CHECK_THROWS_AS(coset_action(G, find_H80(g).h), frobkit::VerificationFailure);
}

TEST_CASE("table1 reproduces the published table") {
  const auto r = verify_table1(gt());
  for (const auto& l : r.lines()) {
    INFO(l.id << " " << l.label << ": " << l.computed << " vs " << l.expected);
    CHECK(l.pass);
  }
  CHECK(r.lines().size() == 21);
  const auto t = table1(gt());
  CHECK(t[0].lifts == t[1].lifts);
  CHECK(format_lifts(t[3].lifts) == "(0,1) (0,4)");
  CHECK(t == table1(build_extension(2)));
}

TEST_CASE("index2_kernels") {
  const auto& g = gt();
  const auto& G = g.group();
  const auto ks = index2_kernels(g);
  REQUIRE(ks.size() == 3);
  std::map<std::string, Subset> by;
  for (const auto& k : ks) {
    CHECK(k.kernel.size() == 240);
    CHECK(G.is_normal(k.kernel));
    by[k.label] = k.kernel;
  }
  auto gens = sl2_f5_generators();
  auto with = [&](const Mat2& m) {
    auto v = gens;
    v.push_back(m);
    return g.subgroup(v);
  };
  CHECK(by.at("sgn") == with(scalar(2)));
  CHECK(by.at("det") == with(w_matrix()));
  CHECK(by.at("det*sgn") == with(w_prime_matrix()));
  CHECK(G.center_of(by.at("sgn")).size() == 4);
  CHECK(G.center_of(by.at("det")).size() == 2);
  CHECK(G.center_of(by.at("det*sgn")).size() == 2);
}

TEST_CASE("verify_inertia_matrices") {
  const auto r = verify_inertia_matrices(gt());
  for (const auto& l : r.lines()) {
    INFO(l.id << ": " << l.computed << " vs " << l.expected);
    CHECK(l.pass);
  }
  CHECK_FALSE(r.notes().empty());
  CHECK(w_matrix().order() == 4);
  CHECK(w_matrix() * w_matrix() == scalar(-1));
}

TEST_CASE("matrix groups over other fields") {
  using F3 = frobkit::arith::SmallPrimeField<3>;
  using M3 = Mat2T<F3>;
  const auto gl = MatrixGroup<F3>::build({M3{F3(1), F3(1), F3(0), F3(1)}, M3{F3(1), F3(0), F3(1), F3(1)},
                                          M3{F3(-1), F3(0), F3(0), F3(1)}});
  CHECK(gl.size() == 48);
  CHECK(gl.group().num_classes() == 8);
}

TEST_CASE("verify_table2") {
  const auto r = frobkit::groups::verify_table2(gt());
  for (const auto& l : r.lines()) INFO(l.id << ": " << l.computed);
  CHECK(r.all_pass());
  CHECK(r.lines().size() == 13);
}
