#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "doctest.h"
#include "frobkit/arith/modular.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/frobenius/pipeline.hpp"

using frobkit::frobenius::Pipeline;
using frobkit::frobenius::Verdict;
using frobkit::groups::S5Class;

namespace {

const Pipeline& pipeline() {
  static const Pipeline p(frobkit::frobenius::load_data_bundle(FROBKIT_TEST_DATA_DIR));
  return p;
}

int euler_symbol(std::int64_t a, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
  if (r == 0) return 0;
  return frobkit::arith::pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int brute_roots_f5(std::uint64_t p) {
  int n = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x5 = frobkit::arith::pow_mod(x, 5, p);
    n += (x5 + 2 * p - x - 1) % p == 0 ? 1 : 0;
  }
  return n;
}

}  // namespace

TEST_CASE("polynomial file formats") {
  using frobkit::frobenius::parse_poly_text;
  CHECK(parse_poly_text("# c\n-1 -1 0 0 0 1\n") == frobkit::poly::x_pow_minus_x_minus_one(5));
  CHECK(parse_poly_text("5: 1\n1: -1\n0: -1\n") == frobkit::poly::x_pow_minus_x_minus_one(5));
  CHECK_THROWS_AS(parse_poly_text("1 2\n3 4\n"), frobkit::ParseError);
  CHECK_THROWS_AS(parse_poly_text("1: 2\n1: 3\n"), frobkit::ParseError);
  CHECK_THROWS_AS(parse_poly_text("1: 2\n3 4\n"), frobkit::ParseError);
  CHECK_THROWS_AS(parse_poly_text("# only\n"), frobkit::ParseError);
  CHECK_THROWS_AS(parse_poly_text("x: 2\n"), frobkit::ParseError);
}

TEST_CASE("data bundle integrity") {
  const auto b = frobkit::frobenius::load_data_bundle(FROBKIT_TEST_DATA_DIR);
  CHECK(b.h.degree() == 48);
  CHECK(b.h.coeff(46).to_string() == "3952905035040");
  CHECK(b.g.to_line() == "9 7 -31 30 -10 -1 1");
  CHECK(b.checksum == frobkit::frobenius::load_data_bundle(FROBKIT_TEST_DATA_DIR).checksum);
  CHECK_THROWS_AS(frobkit::frobenius::load_data_bundle("/nonexistent"), frobkit::DataError);

  auto h = b.h.coefficients();
  h[46] += frobkit::arith::Integer(1);
  CHECK_THROWS_AS(frobkit::frobenius::check_h(frobkit::poly::PolyZ(h)), frobkit::DataError);
  h = b.h.coefficients();
  h[3] = 1;
  CHECK_THROWS_AS(frobkit::frobenius::check_h(frobkit::poly::PolyZ(h)), frobkit::DataError);
  h = b.h.coefficients();
  h[48] = 2;
  CHECK_THROWS_AS(frobkit::frobenius::check_h(frobkit::poly::PolyZ(h)), frobkit::DataError);

  // A tampered copy is rejected by the loader.
  const auto dir = std::filesystem::temp_directory_path() / "frobkit_bundle_test";
  std::filesystem::create_directories(dir);
  for (const char* f : {"f5.poly", "g.poly", "h.poly"}) {
    std::filesystem::copy_file(std::string(FROBKIT_TEST_DATA_DIR) + "/" + f, dir / f,
                               std::filesystem::copy_options::overwrite_existing);
  }
  std::ofstream(dir / "g.poly") << "9 7 -31 30 -10 -1 2\n";
  CHECK_THROWS_AS(frobkit::frobenius::load_data_bundle(dir.string()), frobkit::DataError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report at small primes") {
  const auto& pl = pipeline();
  const auto r2 = pl.report(2);
  CHECK(r2.type5 == frobkit::poly::CycleType({2, 3}));
  CHECK(r2.cls == S5Class::kSixType);
  CHECK(r2.n_p == 0);
  CHECK(r2.k2869 == -1);
  CHECK(frobkit::groups::sgn(r2.cls) == -1);
  CHECK(r2.all_pass());

  const auto r5 = pl.report(5);
  CHECK(r5.cls == S5Class::kFiveCycle);
  CHECK(r5.type5 == frobkit::poly::CycleType({5}));
  CHECK(r5.verdicts[3] == Verdict::kPass);

  CHECK_THROWS_AS(pl.report(19), frobkit::RamifiedError);
  CHECK_THROWS_AS(pl.report(151), frobkit::RamifiedError);
  CHECK_THROWS_AS(pl.report(21), frobkit::DomainError);
}

TEST_CASE("report fields against independent oracles") {
  const auto& pl = pipeline();
  for (auto p : frobkit::arith::primes_up_to(600)) {
    if (p == 19 || p == 151) continue;
    const auto r = pl.report(p);
    INFO("p = " << p);
    REQUIRE(r.n_p == brute_roots_f5(p));
    if (p > 2) {
      REQUIRE(r.k19 == euler_symbol(-19, p));
      REQUIRE(r.k151 == euler_symbol(-151, p));
      REQUIRE(r.k2869 == euler_symbol(2869, p));
    }
    REQUIRE(r.det == (r.k19 == 1 ? 1 : 4));
    REQUIRE(r.all_pass());
    if (r.type48) {
      REQUIRE(r.type48->total() == 48);
      REQUIRE(r.ap_sq.has_value());
      REQUIRE(!r.candidates.empty());
      // Cor. 1.3 restated directly.
      const int rhs = 1 + r.k2869 * (r.k19 * *r.ap_sq + r.k2869 - 1);
      REQUIRE(((r.n_p - rhs) % 5 + 5) % 5 == 0);
    }
  }
}

TEST_CASE("a_p^2 is well defined on every fibre") {
  const auto& pl = pipeline();
  const auto& g = pl.group();
  for (int a = 0; a < 2; ++a) {
    for (const auto& [t, classes] : pl.action_table(a).inverse) {
      for (int det : {1, 4}) {
        for (auto cls : frobkit::groups::kAllS5Classes) {
          std::set<std::uint32_t> sq;
          for (int k : pl.candidates(a, t, det, cls)) {
            const auto& m = g.element(g.group().class_rep(k));
            REQUIRE(frobkit::groups::s5_class_of(m) == cls);
            REQUIRE(m.det() == frobkit::arith::F25(det, 0));
            sq.insert((m.trace() * m.trace()).code());
          }
          REQUIRE(sq.size() <= 1);
        }
      }
    }
  }
}

TEST_CASE("calibration") {
  const auto& pl = pipeline();
  const auto& c = pl.calibration();
  CHECK(c.primes.size() == 25);
  CHECK(c.primes.front() == 3);
  CHECK(std::find(c.primes.begin(), c.primes.end(), 19U) == c.primes.end());
  CHECK(c.agreements[static_cast<std::size_t>(c.action)] == 25);
  // Both actions share the class-to-type map, so they tie and N1 wins.
  CHECK(c.name() == "N1");
  CHECK(pl.calibrate(c.primes).action == c.action);

  auto bad = c.primes;
  bad[3] = 19;
  CHECK_THROWS_AS(pl.calibrate(bad), frobkit::DomainError);
  CHECK_THROWS_AS(pl.calibrate({2}), frobkit::DomainError);
  bad = c.primes;
  bad[0] = 4;
  CHECK_THROWS_AS(pl.calibrate(bad), frobkit::DomainError);
}

TEST_CASE("verify_range") {
  const auto& pl = pipeline();
  const auto s = pl.verify_range(1000);
  CHECK(s.checks.all_pass());
  CHECK(s.reports.size() == 168 - 2);
  // The identity has density 1/120; none of the 166 primes below 1000 splits f5.
  for (const auto& [c, n] : s.class_counts) CHECK(n > (c == S5Class::kIdentity ? -1 : 0));
  CHECK(std::is_sorted(s.reports.begin(), s.reports.end(), [](auto& a, auto& b) { return a.p < b.p; }));
  // h is even, so never squarefree mod 2.
  CHECK(s.skipped.front().first == 2);
  CHECK(std::count_if(s.skipped.begin(), s.skipped.end(), [](auto& x) { return x.second == "ramified"; }) == 2);
  CHECK_THROWS_AS(pl.verify_range(50), frobkit::DomainError);
  CHECK(pl.sweep(1).reports.empty());
  // 25 primes up to 100, less 19.
  CHECK(pl.sweep(100).reports.size() == 24);
}

TEST_CASE("reports do not depend on traversal order") {
  const auto& pl = pipeline();
  auto primes = frobkit::arith::primes_up_to(300);
  primes.erase(std::remove_if(primes.begin(), primes.end(), [](auto p) { return p == 19 || p == 151; }),
               primes.end());
  std::vector<std::string> fwd;
  std::vector<std::string> bwd;
  for (auto p : primes) fwd.push_back(pl.report(p).verdict_string() + pl.report(p).type5.to_string());
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
    bwd.insert(bwd.begin(), pl.report(*it).verdict_string() + pl.report(*it).type5.to_string());
  }
  CHECK(fwd == bwd);
}

TEST_CASE("triple injectivity") {
  const auto rep = frobkit::frobenius::triple_injectivity_check(pipeline().group());
  for (const auto& l : rep.lines()) INFO(l.id << ": " << l.computed);
  CHECK(rep.all_pass());
}

TEST_CASE("cor13_rhs") {
  using frobkit::frobenius::cor13_rhs;
  // identity: a_p = 2, all symbols +1 -> 5 = 0 mod 5.
  CHECK(cor13_rhs(1, 1, 4) == 0);
  // 5-cycle class with a_p^2 = 4: N_p = 0.
  CHECK(cor13_rhs(1, 1, 4) == 0);
  CHECK(cor13_rhs(-1, -1, 0) == 3);
  CHECK(cor13_rhs(1, -1, 1) == 2);
}

TEST_CASE("assemble from supplied types equals report") {
  const auto& pl = pipeline();
  for (std::uint32_t p : {3U, 5U, 67U, 1973U}) {
    const auto t = pl.factor(p);
    CHECK(pl.assemble(p, t).verdict_string() == pl.report(p).verdict_string());
    CHECK(pl.assemble(p, t).candidates == pl.report(p).candidates);
  }
  const auto r1973 = pl.report(1973);
  CHECK(r1973.cls == S5Class::kIdentity);
  CHECK(r1973.n_p == 5);
  // A wrong six-point type is caught by check (i).
  auto t = pl.factor(3);
  t.type6 = frobkit::poly::CycleType({1, 1, 1, 1, 1, 1});
  CHECK(pl.assemble(3, t).verdicts[0] == Verdict::kFail);
  CHECK_THROWS_AS(pl.factor(19), frobkit::RamifiedError);
  int calls = 0;
  const auto s = pl.sweep(200, [&](std::uint32_t p) {
    ++calls;
    return pl.factor(p);
  });
  CHECK(calls == static_cast<int>(s.reports.size()));
}
