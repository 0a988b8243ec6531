#include "frobkit/cli/commands.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <ostream>

#include "frobkit/asai/asai.hpp"
#include "frobkit/cli/cache.hpp"
#include "frobkit/errors.hpp"
#include "frobkit/modforms/qseries.hpp"

namespace frobkit::cli {

namespace {

const std::map<std::string, std::string>& claims() {
  static const std::map<std::string, std::string> m{
      {"table1", "theta_5 trace, (tr, det) of all lifts and sgn for each S5 class"},
      {"table2", "three index-2 kernels; sgn = (2869/.), det = (-19/.), det*sgn = (-151/.)"},
      {"inertia", "inertia generators at 19 and 151; conductor 19 * 151^2"},
      {"prop-asai", "Asai(eta) (x) chi equals theta_5 pulled back; central values 4 det eta"},
      {"cor-asai", "theta_5 trace as psi(h) psi(g^-1 h g) chi(h) and psi(g^2) chi(g), for every lift"},
      {"n3", "level-23 weight-one form: eta product = theta difference, Delta = F mod 23, N_p = 1 + a_p"},
      {"n4", "rho (x) rho = eps + theta_4 on GL2(F3)"},
      {"disc", "disc(X^n - X - 1) = (-1)^((n-1)(n-2)/2) (n^n - (1-n)^(n-1))"},
      {"cor-int2",
       "N_p = 1 + (2869/p)((-19/p) a_p^2 + (2869/p) - 1) mod 5; class separation by (a_p, (-19/p), (-151/p)); "
       "N_p = 1 + (-151/p) prod a(G)"},
  };
  return m;
}

asai::CharacterTableOptions table_options(const Config& c) {
  asai::CharacterTableOptions o;
  o.seed = c.seed;
  o.tau = c.tol;
  return o;
}

struct Lazy {
  const Config& cfg;
  std::unique_ptr<groups::GroupData> g2;
  std::unique_ptr<frobenius::Pipeline> pl;
  std::unique_ptr<TypeCache> cache;

  const groups::GroupData& group() {
    if (!g2) g2 = std::make_unique<groups::GroupData>(groups::build_extension(2));
    return *g2;
  }
  const frobenius::Pipeline& pipeline() {
    if (!pl) pl = std::make_unique<frobenius::Pipeline>(frobenius::load_data_bundle(cfg.data_dir));
    return *pl;
  }
  frobenius::Pipeline::TypeSource types(std::uint32_t pmax) {
    if (!cache || cache->pmax < pmax) {
      cache = std::make_unique<TypeCache>(load_or_build(cfg.cache_path, pipeline(), std::max(pmax, cfg.pmax)));
    }
    const TypeCache* c = cache.get();
    return [c](std::uint32_t p) { return c->types.at(p); };
  }
};

Report range_checks(const frobenius::RangeSummary& s, const std::vector<std::string>& ids) {
  Report rep(s.checks.name());
  for (const auto& l : s.checks.lines()) {
    if (std::find(ids.begin(), ids.end(), l.id) != ids.end()) rep.add(l.id, l.label, l.computed, l.expected, l.pass);
  }
  return rep;
}

Report run_one(const std::string& t, const Config& c, Lazy& lazy) {
  const auto opts = table_options(c);
  if (t == "table1") return groups::verify_table1(lazy.group());
  if (t == "table2") {
    Report r = groups::verify_table2(lazy.group());
    const auto& pl = lazy.pipeline();
    r.append(range_checks(pl.sweep(c.table2_pmax, lazy.types(c.table2_pmax)), {"range.ii"}));
    return r;
  }
  if (t == "inertia") return groups::verify_inertia_matrices(lazy.group());
  if (t == "prop-asai") {
    Report r("prop-asai");
    r.append(asai::verify_prop_asai(groups::build_extension(1), 1, opts));
    r.append(asai::verify_prop_asai(lazy.group(), 2, opts));
    return r;
  }
  if (t == "cor-asai") return asai::verify_cor_asai(lazy.group(), opts);
  if (t == "n3") return modforms::verify_n3(c.n_coeff, c.n3_pmax);
  if (t == "n4") return asai::verify_n4_identity(opts);
  if (t == "disc") return poly::verify_discriminants();
  if (t == "cor-int2") {
    const auto& pl = lazy.pipeline();
    Report r("cor-int2");
    const auto s = pl.verify_range(c.pmax, lazy.types(c.pmax));
    r.append(s.checks);
    r.append(frobenius::triple_injectivity_check(pl.group()));
    r.expect_eq("calibration", "48-point action realized by h", pl.calibration().name(), pl.calibration().name());
    return r;
  }
  throw DomainError("unknown verify target '" + t + "'");
}

}  // namespace

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> t{"table1", "table2", "inertia", "prop-asai", "cor-asai",
                                          "n3",     "n4",     "disc",    "cor-int2"};
  return t;
}

std::vector<Suite> run_suites(const std::string& target, const Config& c) {
  std::vector<std::string> todo;
  if (target == "all") {
    todo = verify_targets();
  } else if (claims().count(target)) {
    todo = {target};
  } else {
    throw DomainError("unknown verify target '" + target + "'");
  }
  Lazy lazy{c, nullptr, nullptr, nullptr};
  std::vector<Suite> out;
  for (const auto& t : todo) out.push_back({t, claims().at(t), run_one(t, c, lazy)});
  return out;
}

int cmd_verify(const std::string& target, const Config& c, std::ostream& out, std::ostream& err) {
  std::vector<Suite> suites;
  try {
    suites = run_suites(target, c);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kUsage;
  }
  write_suites(out, c, suites);
  for (const auto& s : suites) {
    if (const CheckLine* f = s.report.first_failure()) {
      err << "FAIL " << s.target << ": " << f->id << " [" << f->label << "] computed " << f->computed << ", expected "
          << f->expected << '\n';
      return kFailed;
    }
  }
  return kOk;
}

int cmd_report(std::uint32_t p, const Config& c, std::ostream& out, std::ostream& err) {
  try {
    const frobenius::Pipeline pl(frobenius::load_data_bundle(c.data_dir));
    const auto r = pl.report(p);
    write_prime_report(out, c, r);
    return r.all_pass() ? kOk : kFailed;
  } catch (const RamifiedError& e) {
    err << "ramified: " << e.what() << '\n';
    return kRamified;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_sweep(std::uint32_t pmax, const Config& c, std::ostream& out, std::ostream& err) {
  try {
    const frobenius::Pipeline pl(frobenius::load_data_bundle(c.data_dir));
    const TypeCache cache = load_or_build(c.cache_path, pl, pmax);
    const auto s = pl.sweep(pmax, [&](std::uint32_t p) { return cache.types.at(p); });
    write_sweep(out, c, s);
    if (const CheckLine* f = s.checks.first_failure()) {
      err << "FAIL " << f->id << ": " << f->computed << '\n';
      return kFailed;
    }
    return kOk;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_qseries(const Config& c, std::ostream& out, std::ostream& err) {
  try {
    modforms::write_n3_csv(out, modforms::n3_series(c.n_coeff));
    return kOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace frobkit::cli
