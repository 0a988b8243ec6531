#include <iostream>

#include "CLI11.hpp"
#include "frobkit/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace frobkit::cli;
  Config cfg = default_config();
  std::string format = "json";

  CLI::App app{"Frobenius data for X^5 - X - 1 and the mod-5 representation behind it"};
  app.require_subcommand(1);
  app.add_option("--pmax", cfg.pmax, "prime bound for the congruence sweep")->capture_default_str();
  app.add_option("--ncoeff", cfg.n_coeff, "q-series truncation order")->capture_default_str();
  app.add_option("--seed", cfg.seed, "character-table seed")->capture_default_str();
  app.add_option("--tol", cfg.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--cache", cfg.cache_path, "factorization cache file");
  app.add_option("--data-dir", cfg.data_dir, "directory with f5.poly, g.poly, h.poly")->capture_default_str();

  std::string target;
  auto* verify = app.add_subcommand("verify", "check a group of claims; exit 0 iff all pass");
  verify->add_option("target", target, "table1|table2|inertia|prop-asai|cor-asai|n3|n4|disc|cor-int2|all")
      ->required();

  std::uint32_t p = 0;
  auto* report = app.add_subcommand("report", "single-prime Frobenius report");
  report->add_option("p", p, "unramified prime")->required();

  std::uint32_t sweep_max = 0;
  auto* sweep = app.add_subcommand("sweep", "per-prime table and class frequencies");
  sweep->add_option("pmax", sweep_max, "prime bound")->required();

  app.add_subcommand("qseries", "CSV of n, a_n of the level-23 form, tau(n) mod 23");

  CLI11_PARSE(app, argc, argv);
  cfg.format = parse_format(format);

  if (*verify) return cmd_verify(target, cfg, std::cout, std::cerr);
  if (*report) return cmd_report(p, cfg, std::cout, std::cerr);
  if (*sweep) return cmd_sweep(sweep_max, cfg, std::cout, std::cerr);
  return cmd_qseries(cfg, std::cout, std::cerr);
}
