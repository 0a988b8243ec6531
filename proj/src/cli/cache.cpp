#include "frobkit/cli/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "frobkit/arith/modular.hpp"

namespace frobkit::cli {

using frobenius::PrimeTypes;
using poly::CycleType;

namespace {

constexpr const char* kMagic = "frobkit-type-cache";

std::string opt(const std::optional<CycleType>& t) { return t ? t->to_string() : "-"; }

std::optional<CycleType> parse_opt(const std::string& s) {
  if (s == "-") return std::nullopt;
  return CycleType::parse(s);
}

}  // namespace

std::string serialize(const TypeCache& c) {
  std::ostringstream body;
  body << kMagic << ' ' << kCacheVersion << '\n' << "checksum " << c.data_checksum << '\n' << "pmax " << c.pmax << '\n';
  for (const auto& [p, t] : c.types) {
    body << p << '|' << t.type5.to_string() << '|' << opt(t.type6) << '|' << opt(t.type48) << '\n';
  }
  const std::string b = body.str();
  return b + "end " + std::to_string(frobenius::fnv1a(b)) + '\n';
}

std::optional<TypeCache> deserialize(const std::string& text) {
  const auto end = text.rfind("end ");
  if (end == std::string::npos) return std::nullopt;
  const std::string body = text.substr(0, end);
  if (text.substr(end) != "end " + std::to_string(frobenius::fnv1a(body)) + '\n') return std::nullopt;
  std::istringstream in(body);
  std::string magic;
  int version = 0;
  std::string key;
  TypeCache c;
  if (!(in >> magic >> version) || magic != kMagic || version != kCacheVersion) return std::nullopt;
  if (!(in >> key >> c.data_checksum) || key != "checksum") return std::nullopt;
  if (!(in >> key >> c.pmax) || key != "pmax") return std::nullopt;
  std::string line;
  std::getline(in, line);
  try {
    while (std::getline(in, line)) {
      std::vector<std::string> f;
      std::istringstream ls(line);
      for (std::string part; std::getline(ls, part, '|');) f.push_back(part);
      if (f.size() != 4) return std::nullopt;
      PrimeTypes t{CycleType::parse(f[1]), parse_opt(f[2]), parse_opt(f[3])};
      c.types.emplace(static_cast<std::uint32_t>(std::stoul(f[0])), std::move(t));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return c;
}

TypeCache load_or_build(const std::string& path, const frobenius::Pipeline& pl, std::uint32_t pmax,
                        CacheOutcome* outcome) {
  const std::uint64_t sum = pl.data().checksum;
  if (!path.empty()) {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      auto c = deserialize(ss.str());
      if (c && c->data_checksum == sum && c->pmax >= pmax) {
        if (outcome) *outcome = CacheOutcome::kHit;
        return *c;
      }
    }
  }
  TypeCache c;
  c.data_checksum = sum;
  c.pmax = pmax;
  for (auto p : arith::primes_up_to(pmax)) {
    if (p == 19 || p == 151) continue;
    c.types.emplace(p, pl.factor(p));
  }
  if (outcome) *outcome = path.empty() ? CacheOutcome::kDisabled : CacheOutcome::kRebuilt;
  if (!path.empty()) {
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << serialize(c);
    }
    std::rename(tmp.c_str(), path.c_str());
  }
  return c;
}

}  // namespace frobkit::cli
