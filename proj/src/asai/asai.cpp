#include "frobkit/asai/asai.hpp"

#include <cmath>
#include <map>

#include "frobkit/errors.hpp"

namespace frobkit::asai {

using arith::F25;
using groups::FiniteGroup;

namespace {

std::uint32_t projective_key(const Mat2& m) {
  const F25 lead = !m.a.is_zero() ? m.a : m.b;
  return (lead.inverse() * m).encode();
}

std::string fmt(Complex z, double tau) { return format_complex(z, tau); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

ClassFunction asai_transfer(const ClassFunction& psi, const GroupData& h, const GroupData& g, int g0) {
  if (psi.group_ptr() != h.group_ptr()) throw DomainError("asai_transfer: psi is not a class function on h");
  if (g.size() != 2 * h.size()) throw DomainError("asai_transfer: subgroup index is not 2");
  std::vector<int> in_h(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) in_h[x] = h.index_of(g.element(static_cast<int>(x)));
  std::size_t members = 0;
  for (int i : in_h) members += i >= 0 ? 1 : 0;
  if (members != h.size()) throw DomainError("asai_transfer: h is not contained in g");
  if (g0 < 0 || static_cast<std::size_t>(g0) >= g.size() || in_h[static_cast<std::size_t>(g0)] >= 0) {
    throw DomainError("asai_transfer: g0 must lie outside h");
  }
  const FiniteGroup& G = g.group();
  const double tau = psi.tolerance();
  auto value = [&](int x, int t) -> Complex {
    const int hx = in_h[static_cast<std::size_t>(x)];
    if (hx >= 0) {
      const int y = G.mul(G.mul(G.inv(t), x), t);
      return psi(hx) * psi(in_h[static_cast<std::size_t>(y)]);
    }
    return psi(in_h[static_cast<std::size_t>(G.mul(x, x))]);
  };
  std::vector<Complex> vals;
  for (std::size_t k = 0; k < G.num_classes(); ++k) {
    const int rep = G.class_rep(static_cast<int>(k));
    const Complex v = value(rep, g0);
    for (int x : G.classes()[k]) {
      if (std::abs(value(x, g0) - v) > tau) {
        throw VerificationFailure("asai_transfer: value depends on the class representative");
      }
    }
    for (std::size_t t = 0; t < g.size(); ++t) {
      if (in_h[t] < 0 && std::abs(value(rep, static_cast<int>(t)) - v) > tau) {
        throw VerificationFailure("asai_transfer: value depends on the choice of g0");
      }
    }
    vals.push_back(v);
  }
  return ClassFunction(g.group_ptr(), std::move(vals), tau);
}

ClassFunction chi_from_lemma(const std::function<Complex(const Mat2&)>& alpha,
                             const std::function<Complex(S5Class)>& beta, const GroupData& g, Section section,
                             double tau) {
  if (std::abs(alpha(groups::scalar(-1)) - Complex(1.0)) > tau) {
    throw DomainError("chi_from_lemma: alpha is not trivial on the order-2 subgroup of the center");
  }
  std::map<std::uint32_t, int> sec;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const Mat2& m = g.element(static_cast<int>(x));
    if (m.det() != F25::one()) continue;
    const auto key = projective_key(m);
    auto it = sec.find(key);
    if (it == sec.end()) {
      sec.emplace(key, static_cast<int>(x));
    } else if (section == Section::kMaximal) {
      it->second = static_cast<int>(x);  // elements are in increasing encoding order
    }
  }
  const FiniteGroup& G = g.group();
  std::vector<Complex> per(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    const Mat2& m = g.element(static_cast<int>(x));
    auto it = sec.find(projective_key(m));
    if (it == sec.end()) throw InternalError("chi_from_lemma: projective class without a det-1 member");
    const Mat2 c = m * g.element(it->second).inverse();
    if (!c.is_scalar()) throw InternalError("chi_from_lemma: section does not differ by a scalar");
    per[x] = alpha(c) * beta(groups::s5_class_of(m));
  }
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      const int xy = G.mul(static_cast<int>(x), static_cast<int>(y));
      if (std::abs(per[static_cast<std::size_t>(xy)] - per[x] * per[y]) > tau) {
        throw InternalError("chi_from_lemma: resulting function is not multiplicative");
      }
    }
  }
  return ClassFunction::from_elements(g.group_ptr(), [&](int x) { return per[static_cast<std::size_t>(x)]; }, tau);
}

ClassFunction theta_std(const GroupData& g, double tau) {
  return ClassFunction::from_elements(
      g.group_ptr(), [&](int x) { return Complex(groups::theta_trace(groups::s5_class_of(g.element(x)))); }, tau);
}

ClassFunction epsilon(const GroupData& g, double tau) {
  return ClassFunction::from_elements(
      g.group_ptr(), [&](int x) { return Complex(groups::sgn(groups::s5_class_of(g.element(x)))); }, tau);
}

GroupData psl_preimage(const GroupData& g) {
  groups::Subset s;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (groups::projective_data(g.element(static_cast<int>(x))).in_psl) s.push_back(static_cast<int>(x));
  }
  return g.restrict_to(s);
}

namespace {

struct EtaData {
  ClassFunction psi;
  ClassFunction asai;
  ClassFunction chi;
  ClassFunction chi_alt;
};

// det eta(c) for central c, from psi(c) = 2 lambda.
Complex det_eta(const ClassFunction& psi, const GroupData& h, const Mat2& c) {
  const Complex lambda = psi(h.require_index(c)) / 2.0;
  return lambda * lambda;
}

std::vector<EtaData> eta_data(const GroupData& g, const GroupData& h, const CharacterTable& t, double tau) {
  const int g0 = g.require_index(groups::w_matrix());
  std::vector<EtaData> out;
  for (const auto& psi : t.of_degree(2)) {
    auto alpha = [&](const Mat2& c) { return 1.0 / det_eta(psi, h, c); };
    auto beta = [](S5Class c) { return Complex(groups::sgn(c)); };
    out.push_back({psi, asai_transfer(psi, h, g, g0), chi_from_lemma(alpha, beta, g, Section::kMinimal, tau),
                   chi_from_lemma(alpha, beta, g, Section::kMaximal, tau)});
  }
  return out;
}

}  // namespace

Report verify_prop_asai(const GroupData& g, int r, const CharacterTableOptions& opts) {
  if (r != 1 && r != 2) throw DomainError("verify_prop_asai: r must be 1 or 2");
  const double tau = opts.tau;
  Report rep("prop_asai_r" + std::to_string(r));
  const std::size_t want_order = r == 1 ? 240 : 480;
  rep.expect_eq("prop.group_order", "G", std::to_string(g.size()), std::to_string(want_order));
  const GroupData h = psl_preimage(g);
  rep.expect_eq("prop.subgroup_order", "ker sgn", std::to_string(h.size()), std::to_string(want_order / 2));
  const CharacterTable th = character_table(h.group_ptr(), opts);
  const CharacterTable tg = character_table(g.group_ptr(), opts);
  const auto etas = eta_data(g, h, th, tau);
  rep.expect_eq("prop.degree2_count", "ker sgn", std::to_string(etas.size()), r == 1 ? "2" : "4");

  const FiniteGroup& G = g.group();
  const ClassFunction theta = theta_std(g, tau);
  const ClassFunction theta_eps = theta * epsilon(g, tau);
  const auto center = G.center();
  for (std::size_t e = 0; e < etas.size(); ++e) {
    const auto& d = etas[e];
    const std::string tag = "eta" + std::to_string(e);
    const ClassFunction prod = d.asai * d.chi;

    for (int c : center) {
      const Mat2& cm = g.element(c);
      const Complex want = 4.0 * det_eta(d.psi, h, cm);
      rep.add("prop.central_value", tag + " @ " + cm.to_string(), fmt(d.asai(c), tau), fmt(want, tau),
              std::abs(d.asai(c) - want) <= tau);
    }
    rep.expect_eq("prop.chi_section_independent", tag, fmt(d.chi.max_deviation(d.chi_alt), tau), "0");
    rep.expect_eq("prop.chi_at_w", tag, fmt(d.chi(g.require_index(groups::w_matrix())), tau), "-1");
    if (r == 2) rep.expect_eq("prop.chi_at_2I", tag, fmt(d.chi(g.require_index(groups::scalar(2))), tau), "-1");

    double fibre = 0;
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (int c : center) fibre = std::max(fibre, std::abs(prod(static_cast<int>(x)) - prod(G.mul(c, static_cast<int>(x)))));
    }
    rep.add("prop.factors_through_S5", tag, format_complex(fibre, tau), "0", fibre <= tau);
    rep.add("prop.equals_theta", tag, fmt(prod.max_deviation(theta), tau), "0", prod.approx_equal(theta));
    const Complex ip = inner_product(prod, theta);
    rep.add("prop.inner_theta", tag, fmt(ip, tau), "1", std::abs(ip - 1.0) <= tau);
    const Complex ipe = inner_product(prod, theta_eps);
    rep.add("prop.inner_theta_eps", tag, fmt(ipe, tau), "0", std::abs(ipe) <= tau);
    rep.add("prop.degree", tag, fmt(prod.degree(), tau), "4", std::abs(prod.degree() - 4.0) <= tau);
    bool integral = true;
    for (const auto& v : prod.values()) integral = integral && std::abs(v - std::round(v.real())) <= tau;
    rep.expect_eq("prop.values_real_integral", tag, yes_no(integral), "yes");
    bool virt = true;
    for (const auto& m : tg.decompose(d.asai)) virt = virt && std::abs(m - std::round(m.real())) <= tau;
    rep.expect_eq("prop.asai_virtual_character", tag, yes_no(virt), "yes");
  }
  return rep;
}

Report verify_cor_asai(const GroupData& g, const CharacterTableOptions& opts) {
  const double tau = opts.tau;
  Report rep("cor_asai");
  const GroupData h = psl_preimage(g);
  const CharacterTable th = character_table(h.group_ptr(), opts);
  const auto etas = eta_data(g, h, th, tau);
  const FiniteGroup& G = g.group();

  std::map<S5Class, std::vector<int>> lifts;
  std::vector<int> odd;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const S5Class c = groups::s5_class_of(g.element(static_cast<int>(x)));
    lifts[c].push_back(static_cast<int>(x));
    if (groups::sgn(c) < 0) odd.push_back(static_cast<int>(x));
  }
  for (std::size_t e = 0; e < etas.size(); ++e) {
    const auto& d = etas[e];
    auto psi_g = [&](int x) { return d.psi(h.require_index(g.element(x))); };
    for (S5Class c : groups::kAllS5Classes) {
      Complex first;
      double spread = 0;
      bool have = false;
      auto take = [&](Complex v) {
        if (!have) {
          first = v;
          have = true;
        }
        spread = std::max(spread, std::abs(v - first));
      };
      if (groups::sgn(c) > 0) {
        for (int hx : lifts[c]) {
          for (int gx : odd) take(psi_g(hx) * psi_g(G.mul(G.mul(G.inv(gx), hx), gx)) * d.chi(hx));
        }
      } else {
        for (int gx : lifts[c]) take(psi_g(G.mul(gx, gx)) * d.chi(gx));
      }
      const std::string tag = "eta" + std::to_string(e) + " " + std::string(groups::label(c));
      rep.add("cor.lift_independent", tag, fmt(spread, tau), "0", spread <= tau);
      const Complex want(groups::theta_trace(c));
      rep.add("cor.trace_theta", tag, fmt(first, tau), fmt(want, tau), std::abs(first - want) <= tau);
    }
  }
  return rep;
}

int predicted_hilbert_product(S5Class c, int det_sign) {
  if (det_sign != 1 && det_sign != -1) throw DomainError("predicted_hilbert_product: det_sign must be +1 or -1");
  return det_sign * groups::sgn(c) * groups::theta_trace(c);
}

Report verify_n4_identity(const CharacterTableOptions& opts) {
  using F3 = arith::SmallPrimeField<3>;
  using M3 = groups::Mat2T<F3>;
  const double tau = opts.tau;
  Report rep("n4");
  const auto g = groups::MatrixGroup<F3>::build(
      {M3{F3(1), F3(1), F3(0), F3(1)}, M3{F3(1), F3(0), F3(1), F3(1)}, M3{F3(-1), F3(0), F3(0), F3(1)}});
  rep.expect_eq("n4.group_order", "GL2(F3)", std::to_string(g.size()), "48");

  // P^1(F3): x for [x:1], 3 for [1:0].
  auto image = [](const M3& m, int pt) {
    F3 u;
    F3 v;
    if (pt == 3) {
      u = m.a;
      v = m.c;
    } else {
      u = m.a * F3(pt) + m.b;
      v = m.c * F3(pt) + m.d;
    }
    return v.is_zero() ? 3 : static_cast<int>((u * v.inverse()).value());
  };
  groups::PermAction act;
  act.degree = 4;
  for (const auto& m : g.elements()) {
    std::vector<std::uint16_t> p(4);
    for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(image(m, i));
    act.perms.push_back(std::move(p));
  }
  auto eps = ClassFunction::from_elements(g.group_ptr(), [&](int x) {
    const auto ct = act.cycle_type(x);
    return Complex(((4 - static_cast<int>(ct.parts().size())) % 2 == 0) ? 1.0 : -1.0);
  }, tau);
  auto theta4 = ClassFunction::from_elements(
      g.group_ptr(), [&](int x) { return Complex(act.cycle_type(x).fixed_points() - 1); }, tau);

  const auto table = character_table(g.group_ptr(), opts);
  int faithful = 0;
  const FiniteGroup& G = g.group();
  for (const auto& chi : table.of_degree(2)) {
    int kernel = 0;
    for (std::size_t x = 0; x < G.size(); ++x) kernel += std::abs(chi(static_cast<int>(x)) - 2.0) <= tau ? 1 : 0;
    if (kernel != 1) continue;
    const std::string tag = "faithful" + std::to_string(faithful++);
    const ClassFunction sq = chi * chi;
    const ClassFunction rhs = eps + theta4;
    rep.add("n4.square_identity", tag, fmt(sq.max_deviation(rhs), tau), "0", sq.approx_equal(rhs));
    for (std::size_t k = 0; k < G.num_classes(); ++k) {
      const int rpx = G.class_rep(static_cast<int>(k));
      rep.add("n4.class_value", tag + " @ " + g.element(rpx).to_string(), fmt(sq(rpx), tau), fmt(rhs(rpx), tau),
              std::abs(sq(rpx) - rhs(rpx)) <= tau);
    }
  }
  rep.add("n4.faithful_count", "GL2(F3)", std::to_string(faithful), ">= 1", faithful >= 1);
  return rep;
}

}  // namespace frobkit::asai
