#include "frobkit/frobenius/pipeline.hpp"

#include <algorithm>
#include <set>

#include "frobkit/arith/modular.hpp"
#include "frobkit/asai/asai.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/groups/subgroups.hpp"

namespace frobkit::frobenius {

using arith::F25;
using poly::CycleType;

namespace {

constexpr std::size_t kCalibrationSize = 25;

int det_from_sign(int s) { return s > 0 ? 1 : 4; }
int sign_from_det(int d) { return d == 1 ? 1 : -1; }
int f5(int v) { return ((v % 5) + 5) % 5; }

bool h_squarefree(const poly::PolyZ& h, std::uint32_t p) {
  return poly::is_squarefree(poly::reduce_mod_p(h, p));
}

}  // namespace

char verdict_char(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return 'P';
    case Verdict::kFail:
      return 'F';
    case Verdict::kSkipped:
      return '-';
  }
  return '?';
}

bool FrobeniusReport::all_pass() const {
  return std::none_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::kFail; });
}

std::string FrobeniusReport::verdict_string() const {
  std::string s;
  for (auto v : verdicts) s += verdict_char(v);
  return s;
}

int cor13_rhs(int k19, int k2869, int ap_sq) { return f5(1 + k2869 * (k19 * ap_sq + k2869 - 1)); }

Pipeline::Pipeline(DataBundle data) : data_(std::move(data)), g_(groups::build_extension(2)) {
  const auto h80 = groups::find_H80(g_);
  const auto ns = groups::normal_order10_subgroups(g_, h80);
  for (std::size_t i = 0; i < 2; ++i) {
    tables48_[i] = groups::class_cycletype_table(groups::coset_action(g_.group(), ns[i]), g_.group());
  }
  six_ = groups::six_point_dictionary(g_);
  const auto& grp = g_.group();
  for (std::size_t k = 0; k < grp.num_classes(); ++k) {
    const auto& m = g_.element(grp.class_rep(static_cast<int>(k)));
    class_s5_.push_back(groups::s5_class_of(m));
    class_trace_.push_back(m.trace());
    class_det_.push_back(static_cast<int>(m.det().a().value()));
  }
  calibration_ = calibrate(admissible_primes(kCalibrationSize));
}

std::vector<std::uint32_t> Pipeline::admissible_primes(std::size_t n) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t limit = 256; out.size() < n; limit *= 2) {
    out.clear();
    for (auto p : arith::primes_up_to(limit)) {
      if (out.size() == n) break;
      if (p == 19 || p == 151 || !h_squarefree(data_.h, p)) continue;
      out.push_back(p);
    }
  }
  return out;
}

std::vector<int> Pipeline::candidates(int action, const CycleType& t48, int det, S5Class cls) const {
  const auto& inv = action_table(action).inverse;
  auto it = inv.find(t48);
  std::vector<int> out;
  if (it == inv.end()) return out;
  for (int k : it->second) {
    const auto i = static_cast<std::size_t>(k);
    if (class_det_[i] == det && class_s5_[i] == cls) out.push_back(k);
  }
  return out;
}

CalibrationChoice Pipeline::calibrate(const std::vector<std::uint32_t>& sample) const {
  if (sample.size() < kCalibrationSize) throw DomainError("calibrate: need at least 25 primes");
  for (auto p : sample) {
    if (p == 19 || p == 151) throw DomainError("calibrate: ramified prime " + std::to_string(p) + " in sample");
    if (!arith::is_prime(p)) throw DomainError("calibrate: " + std::to_string(p) + " is not prime");
    if (!h_squarefree(data_.h, p)) throw DomainError("calibrate: h not squarefree mod " + std::to_string(p));
  }
  CalibrationChoice c;
  c.primes = sample;
  for (auto p : sample) {
    const CycleType t5 = poly::factorization_cycle_type(poly::reduce_mod_p(data_.f5, p));
    const CycleType t48 = poly::factorization_cycle_type(poly::reduce_mod_p(data_.h, p));
    const auto cls = groups::s5_class_from_five_point_type(t5);
    if (!cls) throw DataError("calibrate: f5 type " + t5.to_string() + " is not an S5 class");
    const int det = det_from_sign(arith::kronecker(-19, static_cast<std::int64_t>(p)));
    for (int a = 0; a < 2; ++a) {
      if (!candidates(a, t48, det, *cls).empty()) ++c.agreements[static_cast<std::size_t>(a)];
    }
  }
  const auto n = static_cast<int>(sample.size());
  if (c.agreements[0] == n) {
    c.action = 0;
  } else if (c.agreements[1] == n) {
    c.action = 1;
  } else {
    throw DataError("calibrate: neither 48-point action matches h (" + std::to_string(c.agreements[0]) + ", " +
                    std::to_string(c.agreements[1]) + " of " + std::to_string(n) + ")");
  }
  return c;
}

PrimeTypes Pipeline::factor(std::uint32_t p) const {
  if (p == 19 || p == 151) throw RamifiedError(p, "prime " + std::to_string(p) + " is ramified");
  if (!arith::is_prime(p)) throw DomainError("report: " + std::to_string(p) + " is not prime");
  PrimeTypes t;
  t.type5 = poly::factorization_cycle_type(poly::reduce_mod_p(data_.f5, p));
  const auto gp = poly::reduce_mod_p(data_.g, p);
  if (poly::is_squarefree(gp)) t.type6 = poly::factorization_cycle_type(gp);
  const auto hp = poly::reduce_mod_p(data_.h, p);
  if (poly::is_squarefree(hp)) t.type48 = poly::factorization_cycle_type(hp);
  return t;
}

FrobeniusReport Pipeline::assemble(std::uint32_t p, const PrimeTypes& t) const {
  if (p == 19 || p == 151) throw RamifiedError(p, "prime " + std::to_string(p) + " is ramified");
  if (!arith::is_prime(p)) throw DomainError("report: " + std::to_string(p) + " is not prime");
  FrobeniusReport r;
  r.p = p;
  const auto sp = static_cast<std::int64_t>(p);
  r.k19 = arith::kronecker(-19, sp);
  r.k151 = arith::kronecker(-151, sp);
  r.k2869 = arith::kronecker(2869, sp);
  r.det = det_from_sign(r.k19);

  r.type5 = t.type5;
  r.type6 = t.type6;
  r.type48 = t.type48;
  const auto cls = groups::s5_class_from_five_point_type(r.type5);
  if (!cls) throw DataError("report: f5 type " + r.type5.to_string() + " is not an S5 class");
  r.cls = *cls;
  r.n_p = r.type5.count(1);

  auto set = [&](std::size_t i, bool ok) { r.verdicts[i] = ok ? Verdict::kPass : Verdict::kFail; };

  if (r.type6) {
    set(0, six_.at(r.cls) == *r.type6);
  } else {
    r.verdicts[0] = Verdict::kSkipped;
  }

  // sgn, det and det*sgn against the three symbols.
  const int sg = groups::sgn(r.cls);
  bool ok2 = sg == r.k2869 && r.k19 * sg == r.k151;
  set(2, r.n_p == 1 + groups::theta_trace(r.cls));

  auto unique_square = [&](const std::vector<int>& classes) -> std::optional<int> {
    std::set<int> squares;
    for (int k : classes) {
      const F25 t = class_trace_[static_cast<std::size_t>(k)];
      const F25 t2 = t * t;
      squares.insert(t2.in_prime_field() ? static_cast<int>(t2.a().value()) : -1);
    }
    if (squares.size() != 1 || *squares.begin() < 0) return std::nullopt;
    return *squares.begin();
  };
  if (r.type48) {
    r.candidates = candidates(calibration_.action, *r.type48, r.det, r.cls);
    for (int k : r.candidates) r.candidate_traces.push_back(class_trace_[static_cast<std::size_t>(k)].to_string());
    // det is the (-19/p) value; h must admit a lift of the class with that det.
    ok2 = ok2 && !r.candidates.empty();
    r.ap_sq = unique_square(r.candidates);
    set(4, r.ap_sq.has_value());
    set(3, r.ap_sq && f5(r.n_p) == cor13_rhs(r.k19, r.k2869, *r.ap_sq));
  } else {
    // No 48-point data: fall back to all lifts of the class with the given det.
    std::vector<int> lifts;
    for (std::size_t k = 0; k < class_s5_.size(); ++k) {
      if (class_s5_[k] == r.cls && class_det_[k] == r.det) lifts.push_back(static_cast<int>(k));
    }
    const auto sq = unique_square(lifts);
    set(3, sq && f5(r.n_p) == cor13_rhs(r.k19, r.k2869, *sq));
    r.verdicts[4] = Verdict::kSkipped;
  }
  set(1, ok2);

  r.predicted_product = asai::predicted_hilbert_product(r.cls, r.k19);
  set(5, 1 + r.k151 * r.predicted_product == r.n_p);
  return r;
}

RangeSummary Pipeline::sweep(std::uint32_t pmax, const TypeSource& source) const {
  RangeSummary s;
  s.pmax = pmax;
  for (auto c : groups::kAllS5Classes) s.class_counts[c] = 0;
  std::array<int, kCheckIds.size()> passed{};
  std::array<int, kCheckIds.size()> failed{};
  std::array<std::uint32_t, kCheckIds.size()> first_fail{};
  for (auto p : arith::primes_up_to(pmax)) {
    if (p == 19 || p == 151) {
      s.skipped.emplace_back(p, "ramified");
      continue;
    }
    FrobeniusReport r = assemble(p, source ? source(p) : factor(p));
    if (!r.type48) s.skipped.emplace_back(p, "h not squarefree mod p; lift-level checks skipped");
    if (!r.type6) s.skipped.emplace_back(p, "g not squarefree mod p; six-point check skipped");
    ++s.class_counts[r.cls];
    for (std::size_t i = 0; i < kCheckIds.size(); ++i) {
      if (r.verdicts[i] == Verdict::kPass) ++passed[i];
      if (r.verdicts[i] == Verdict::kFail && failed[i]++ == 0) first_fail[i] = p;
    }
    s.reports.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < kCheckIds.size(); ++i) {
    const std::string id = std::string("range.") + kCheckIds[i];
    const std::string ok = std::to_string(passed[i]) + " pass, 0 fail";
    const std::string got = failed[i] == 0 ? ok
                                           : std::to_string(passed[i]) + " pass, " + std::to_string(failed[i]) +
                                                 " fail, first p=" + std::to_string(first_fail[i]);
    s.checks.add(id, "check " + std::string(kCheckIds[i]) + " for p <= " + std::to_string(pmax), got, ok,
                 failed[i] == 0);
  }
  return s;
}

RangeSummary Pipeline::verify_range(std::uint32_t pmax, const TypeSource& source) const {
  if (pmax < 100) throw DomainError("verify_range: pmax must be at least 100");
  return sweep(pmax, source);
}

Report triple_injectivity_check(const groups::GroupData& g) {
  Report rep("triple");
  using Obs = std::tuple<std::uint32_t, int, int>;  // (trace code, det sign, det*sgn)
  std::map<S5Class, std::set<Obs>> obs;
  for (const auto& row : groups::table1(g)) {
    for (const auto& [tr, det] : row.lifts) {
      const int ds = sign_from_det(static_cast<int>(det.a().value()));
      obs[row.cls].insert({tr.code(), ds, ds * row.sgn});
    }
  }
  const auto id = S5Class::kIdentity;
  const auto five = S5Class::kFiveCycle;
  std::vector<std::string> collisions;
  for (auto a : groups::kAllS5Classes) {
    for (auto b : groups::kAllS5Classes) {
      if (a >= b) continue;
      std::vector<Obs> common;
      std::set_intersection(obs[a].begin(), obs[a].end(), obs[b].begin(), obs[b].end(), std::back_inserter(common));
      if (!common.empty()) collisions.push_back(std::string(groups::label(a)) + " ~ " + std::string(groups::label(b)));
    }
  }
  std::string got;
  for (const auto& c : collisions) got += (got.empty() ? "" : "; ") + c;
  const std::string expected = std::string(groups::label(id)) + " ~ " + std::string(groups::label(five));
  rep.expect_eq("triple.collisions", "classes sharing an observable triple", got.empty() ? "none" : got, expected);
  rep.add("triple.identical", "observables of (1) and 5-cycles coincide", obs[id] == obs[five] ? "equal" : "differ",
          "equal", obs[id] == obs[five]);
  return rep;
}

}  // namespace frobkit::frobenius
