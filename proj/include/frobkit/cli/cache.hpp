#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "frobkit/frobenius/pipeline.hpp"

namespace frobkit::cli {

inline constexpr int kCacheVersion = 1;

/// Factorization patterns for every unramified p <= pmax.
struct TypeCache {
  std::uint64_t data_checksum = 0;
  std::uint32_t pmax = 0;
  std::map<std::uint32_t, frobenius::PrimeTypes> types;
};

std::string serialize(const TypeCache& c);
/// nullopt on any version, checksum or format mismatch.
std::optional<TypeCache> deserialize(const std::string& text);

enum class CacheOutcome { kHit, kRebuilt, kDisabled };

/// Reads the cache at path when it matches the data and covers pmax; otherwise
/// recomputes and rewrites it. An empty path disables caching.
TypeCache load_or_build(const std::string& path, const frobenius::Pipeline& pl, std::uint32_t pmax,
                        CacheOutcome* outcome = nullptr);

}  // namespace frobkit::cli
