#include "frobkit/groups/tables.hpp"

#include <algorithm>
#include <set>

#include "frobkit/errors.hpp"
#include "frobkit/groups/subgroups.hpp"

namespace frobkit::groups {

namespace {

void sort_lifts(std::vector<TraceDet>& v) {
  std::sort(v.begin(), v.end(), [](const TraceDet& x, const TraceDet& y) {
    return std::make_pair(x.first.lex_key(), x.second.lex_key()) < std::make_pair(y.first.lex_key(), y.second.lex_key());
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Table1Row row(S5Class c, int tr, std::vector<TraceDet> lifts, int s) {
  sort_lifts(lifts);
  return {c, tr, std::move(lifts), s};
}

std::string char_poly(const Mat2& m) {
  const F25 t = m.trace();
  const F25 d = m.det();
  std::string s = "X^2";
  if (!t.is_zero()) s += " + (" + (-t).to_string() + ")X";
  if (!d.is_zero()) s += d == F25(4, 0) ? " - 1" : " + " + d.to_string();
  return s;
}

}  // namespace

ClassCycleTable class_cycletype_table(const PermAction& a, const FiniteGroup& g) {
  ClassCycleTable t;
  for (std::size_t k = 0; k < g.num_classes(); ++k) {
    const auto ct = a.cycle_type(g.class_rep(static_cast<int>(k)));
    t.by_class.push_back(ct);
    t.inverse[ct].push_back(static_cast<int>(k));
  }
  return t;
}

std::map<S5Class, poly::CycleType> six_point_dictionary(const GroupData& g) {
  const PermAction a = p1_action(g);
  std::map<S5Class, poly::CycleType> dict;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const S5Class c = s5_class_of(g.element(static_cast<int>(x)));
    const auto ct = a.cycle_type(static_cast<int>(x));
    auto [it, inserted] = dict.emplace(c, ct);
    if (!inserted && it->second != ct) throw InternalError("six_point_dictionary: class meets two cycle types");
  }
  return dict;
}

std::vector<Table1Row> table1(const GroupData& g) {
  std::map<S5Class, std::vector<TraceDet>> lifts;
  for (const auto& m : g.elements()) lifts[s5_class_of(m)].emplace_back(m.trace(), m.det());
  std::vector<Table1Row> out;
  for (S5Class c : kAllS5Classes) out.push_back(row(c, theta_trace(c), lifts[c], sgn(c)));
  return out;
}

const std::vector<Table1Row>& expected_table1() {
  const F25 z = F25::zeta();
  auto f = [](int v) { return F25(v, 0); };
  static const std::vector<Table1Row> kRows = {
      row(S5Class::kIdentity, 4, {{f(1), f(4)}, {f(2), f(1)}, {f(3), f(1)}, {f(4), f(4)}}, 1),
      row(S5Class::kFiveCycle, -1, {{f(1), f(4)}, {f(2), f(1)}, {f(3), f(1)}, {f(4), f(4)}}, 1),
      row(S5Class::kDoubleTransposition, 0, {{f(0), f(1)}, {f(0), f(4)}}, 1),
      row(S5Class::kTransposition, 2, {{f(0), f(1)}, {f(0), f(4)}}, -1),
      row(S5Class::kThreeCycle, 1, {{f(1), f(1)}, {f(2), f(4)}, {f(3), f(4)}, {f(4), f(1)}}, 1),
      row(S5Class::kSixType, -1, {{z, f(4)}, {f(2) * z, f(1)}, {-z, f(4)}, {f(-2) * z, f(1)}}, -1),
      row(S5Class::kFourCycle, 0, {{z, f(1)}, {f(2) * z, f(4)}, {-z, f(1)}, {f(-2) * z, f(4)}}, -1),
  };
  return kRows;
}

std::string format_lifts(const std::vector<TraceDet>& lifts) {
  std::string s;
  for (const auto& [t, d] : lifts) {
    if (!s.empty()) s += " ";
    s += "(" + t.to_string() + "," + d.to_string() + ")";
  }
  return s;
}

Report verify_table1(const GroupData& g) {
  Report r("table1");
  const auto got = table1(g);
  const auto& want = expected_table1();
  for (std::size_t i = 0; i < want.size(); ++i) {
    const std::string lbl(label(want[i].cls));
    r.expect_eq("table1.trace_theta", lbl, std::to_string(got[i].theta_trace), std::to_string(want[i].theta_trace));
    r.expect_eq("table1.lifts", lbl, format_lifts(got[i].lifts), format_lifts(want[i].lifts));
    r.expect_eq("table1.sgn", lbl, std::to_string(got[i].sgn), std::to_string(want[i].sgn));
  }
  return r;
}

int fixed_space_dimension(const Mat2& m) {
  const Mat2 k{m.a - F25::one(), m.b, m.c, m.d - F25::one()};
  const bool zero = k.a.is_zero() && k.b.is_zero() && k.c.is_zero() && k.d.is_zero();
  if (zero) return 2;
  return k.det().is_zero() ? 1 : 0;
}

Report verify_inertia_matrices(const GroupData& g) {
  Report r("inertia");
  const F25 z = F25::zeta();
  const F25 two(2, 0);
  const Mat2 m151{F25::zero(), two * z, two * z.inverse(), F25::zero()};
  const Mat2 minus_one = scalar(-1);

  r.expect_eq("inertia.151.member", m151.to_string(), g.contains(m151) ? "yes" : "no", "yes");
  r.expect_eq("inertia.151.order", m151.to_string(), std::to_string(m151.order()), "4");
  r.expect_eq("inertia.151.square", m151.to_string(), (m151 * m151).to_string(), minus_one.to_string());
  r.expect_eq("inertia.151.det", m151.to_string(), m151.det().to_string(), "1");
  r.expect_eq("inertia.151.trace", m151.to_string(), m151.trace().to_string(), "0");
  r.expect_eq("inertia.151.charpoly", m151.to_string(), char_poly(m151), "X^2 + 1");
  r.expect_eq("inertia.151.fixed_dim", m151.to_string(), std::to_string(fixed_space_dimension(m151)), "0");
  r.expect_eq("inertia.151.class", m151.to_string(), std::string(label(s5_class_of(m151))), "(1,4)");

  std::set<std::string> polys;
  int min_fixed_order2 = 3;
  int fixed_order4 = -1;
  for (const auto& m : g.elements()) {
    if (s5_class_of(m) != S5Class::kTransposition) continue;
    polys.insert(char_poly(m));
    const int dim = fixed_space_dimension(m);
    if (m.order() == 2 && !m.is_scalar()) min_fixed_order2 = std::min(min_fixed_order2, dim);
    if (m.order() == 4) fixed_order4 = std::max(fixed_order4, dim);
  }
  std::string joined;
  for (const auto& p : polys) joined += (joined.empty() ? "" : "; ") + p;
  r.expect_eq("inertia.transposition_lifts.charpolys", "(1,4)", joined, "X^2 + 1; X^2 - 1");

  // Order-2 lift at 19 fixes a line; order-4 lift at 151 fixes none.
  const int exp19 = 2 - min_fixed_order2;
  const int exp151 = 2 - std::max(fixed_order4, 0);
  r.expect_eq("inertia.19.fixed_dim", "order-2 transposition lift", std::to_string(min_fixed_order2), "1");
  r.expect_eq("inertia.151.all_order4_fixed_dim", "order-4 transposition lifts", std::to_string(fixed_order4), "0");
  std::int64_t conductor = 1;
  for (int i = 0; i < exp19; ++i) conductor *= 19;
  for (int i = 0; i < exp151; ++i) conductor *= 151;
  r.expect_eq("inertia.conductor", "19^a 151^b", std::to_string(conductor), "433219");

  const Mat2 w = w_matrix();
  const ProjectiveData wp = projective_data(w);
  r.expect_eq("inertia.w.matrix_order", w.to_string(), std::to_string(w.order()), "4");
  r.expect_eq("inertia.w.projective_order", w.to_string(), std::to_string(wp.order), "2");
  r.note("inertia.w.matrix_order",
         "the text calls w an order 2 matrix; w^2 = -I, so its matrix order is 4 and only its projective order is 2");
  return r;
}

}  // namespace frobkit::groups

namespace frobkit::groups {

Report verify_table2(const GroupData& g) {
  Report rep("table2");
  const auto ks = index2_kernels(g);
  rep.expect_eq("table2.count", "surjections to C2", std::to_string(ks.size()), "3");
  const std::map<std::string, std::pair<Mat2, std::size_t>> gens{
      {"sgn", {scalar(2), 4}}, {"det", {w_matrix(), 2}}, {"det*sgn", {w_prime_matrix(), 2}}};
  const auto& grp = g.group();
  for (const auto& k : ks) {
    const auto& [m, center] = gens.at(k.label);
    auto v = sl2_f5_generators();
    v.push_back(m);
    const std::string id = "table2." + k.label;
    rep.expect_eq(id + ".order", "ker " + k.label, std::to_string(k.kernel.size()), "240");
    rep.add(id + ".normal", "ker " + k.label + " normal", grp.is_normal(k.kernel) ? "yes" : "no", "yes",
            grp.is_normal(k.kernel));
    const bool same = g.subgroup(v) == k.kernel;
    rep.add(id + ".generators", "ker " + k.label + " = <SL2(F5), " + m.to_string() + ">", same ? "equal" : "differ",
            "equal", same);
    rep.expect_eq(id + ".center", "center of ker " + k.label, std::to_string(grp.center_of(k.kernel).size()),
                  std::to_string(center));
  }
  return rep;
}

}  // namespace frobkit::groups
