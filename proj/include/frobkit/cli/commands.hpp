#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "frobkit/cli/config.hpp"
#include "frobkit/cli/report.hpp"

namespace frobkit::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kRamified = 3 };

/// table1, table2, inertia, prop-asai, cor-asai, n3, n4, disc, cor-int2.
const std::vector<std::string>& verify_targets();

/// Runs one target ("all" expands to every target). Throws DomainError for an
/// unknown target and DataError when data files are needed but unreadable.
std::vector<Suite> run_suites(const std::string& target, const Config& c);

int cmd_verify(const std::string& target, const Config& c, std::ostream& out, std::ostream& err);
int cmd_report(std::uint32_t p, const Config& c, std::ostream& out, std::ostream& err);
int cmd_sweep(std::uint32_t pmax, const Config& c, std::ostream& out, std::ostream& err);
/// CSV of n, a_n of the level-23 form, tau(n) mod 23, for n <= c.n_coeff.
int cmd_qseries(const Config& c, std::ostream& out, std::ostream& err);

}  // namespace frobkit::cli
