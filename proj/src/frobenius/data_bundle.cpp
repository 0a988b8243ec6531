#include "frobkit/frobenius/data_bundle.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "frobkit/errors.hpp"

namespace frobkit::frobenius {

using poly::PolyZ;

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

PolyZ parse_poly_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<int, arith::Integer> labelled;
  std::vector<std::string> plain;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      plain.push_back(line);
      continue;
    }
    int deg = -1;
    try {
      deg = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("bad degree label: " + line);
    }
    if (deg < 0) throw ParseError("negative degree: " + line);
    std::string v = line.substr(colon + 1);
    v.erase(0, v.find_first_not_of(" \t"));
    v.erase(v.find_last_not_of(" \t\r") + 1);
    if (!labelled.emplace(deg, arith::Integer::parse(v)).second) throw ParseError("repeated degree " + std::to_string(deg));
  }
  if (!plain.empty() && !labelled.empty()) throw ParseError("mixed polynomial formats");
  if (plain.size() > 1) throw ParseError("expected a single coefficient line");
  if (plain.size() == 1) return PolyZ::parse_line(plain[0]);
  if (labelled.empty()) throw ParseError("empty polynomial file");
  std::vector<arith::Integer> c(static_cast<std::size_t>(labelled.rbegin()->first) + 1);
  for (auto& [d, v] : labelled) c[static_cast<std::size_t>(d)] = v;
  return PolyZ(std::move(c));
}

void check_h(const PolyZ& h) {
  if (h.degree() != 48) throw DataError("h: degree " + std::to_string(h.degree()) + ", expected 48");
  if (h.leading() != arith::Integer(1)) throw DataError("h: not monic");
  if (!h.is_even()) throw DataError("h: odd-degree term present");
  if (h.coeff(46) != arith::Integer::parse("3952905035040")) throw DataError("h: X^46 coefficient mismatch");
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolyZ parse_file(const std::string& path, const std::string& text) {
  try {
    return parse_poly_text(text);
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace

DataBundle load_data_bundle(const std::string& dir) {
  DataBundle b;
  std::uint64_t sum = fnv1a("");
  const std::string pf = dir + "/f5.poly";
  const std::string pg = dir + "/g.poly";
  const std::string ph = dir + "/h.poly";
  const std::string tf = slurp(pf);
  const std::string tg = slurp(pg);
  const std::string th = slurp(ph);
  sum = fnv1a(tf, sum);
  sum = fnv1a(tg, sum);
  b.checksum = fnv1a(th, sum);
  b.f5 = parse_file(pf, tf);
  b.g = parse_file(pg, tg);
  b.h = parse_file(ph, th);
  if (b.f5 != poly::x_pow_minus_x_minus_one(5)) throw DataError(pf + ": not X^5 - X - 1");
  if (b.g != PolyZ{9, 7, -31, 30, -10, -1, 1}) throw DataError(pg + ": sextic resolvent mismatch");
  check_h(b.h);
  return b;
}

}  // namespace frobkit::frobenius
