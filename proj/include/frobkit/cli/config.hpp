#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace frobkit::cli {

enum class Format { kJson, kCsv };

struct Config {
  std::uint32_t pmax = 100000;
  int n_coeff = 5000;           // q-series truncation
  int n3_pmax = 5000;
  std::uint32_t table2_pmax = 9999;
  double tol = 1e-6;
  std::uint64_t seed = 0x5eed5;
  Format format = Format::kJson;
  std::string cache_path;       // empty: no cache
  std::string data_dir;
};

Config default_config();
std::string format_name(Format f);
/// Throws DomainError for anything but "json" or "csv".
Format parse_format(const std::string& s);

/// Echo for report headers; the cache path is omitted so output does not depend on it.
nlohmann::json to_json(const Config& c);

}  // namespace frobkit::cli
