#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frobkit/cli/config.hpp"
#include "frobkit/frobenius/pipeline.hpp"
#include "frobkit/report.hpp"

namespace frobkit::cli {

/// A verification suite tied to the claim it checks.
struct Suite {
  std::string target;
  std::string claim;
  Report report;
};

nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const frobenius::FrobeniusReport& r);

/// Quotes a CSV field when it holds a comma or quote.
std::string csv_field(const std::string& s);

inline const char* kSweepCsvHeader =
    "p,type5,type6,type48,class,ap_sq,N_p,k19,k151,k2869,verdicts,predicted_product";
std::string csv_row(const frobenius::FrobeniusReport& r);

void write_suites(std::ostream& out, const Config& c, const std::vector<Suite>& suites);
void write_prime_report(std::ostream& out, const Config& c, const frobenius::FrobeniusReport& r);
/// Rows sorted by p, then class frequencies against |C|/120.
void write_sweep(std::ostream& out, const Config& c, const frobenius::RangeSummary& s);

}  // namespace frobkit::cli
