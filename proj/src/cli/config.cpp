#include "frobkit/cli/config.hpp"

#include "frobkit/errors.hpp"

namespace frobkit::cli {

Config default_config() {
  Config c;
  c.data_dir = FROBKIT_DEFAULT_DATA_DIR;
  return c;
}

std::string format_name(Format f) { return f == Format::kCsv ? "csv" : "json"; }

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw DomainError("unknown format '" + s + "'");
}

nlohmann::json to_json(const Config& c) {
  return {{"pmax", c.pmax},   {"n_coeff", c.n_coeff}, {"n3_pmax", c.n3_pmax}, {"table2_pmax", c.table2_pmax},
          {"tol", c.tol},     {"seed", c.seed},       {"format", format_name(c.format)}};
}

}  // namespace frobkit::cli
