#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "frobkit/cli/cache.hpp"
#include "frobkit/cli/commands.hpp"
#include "frobkit/errors.hpp"

using namespace frobkit::cli;
namespace fs = std::filesystem;

namespace {

Config test_config() {
  Config c = default_config();
  c.data_dir = FROBKIT_TEST_DATA_DIR;
  c.pmax = 2000;
  c.table2_pmax = 2000;
  c.n_coeff = 300;
  c.n3_pmax = 300;
  return c;
}

struct Run {
  int rc;
  std::string out;
  std::string err;
};

template <class F>
Run capture(F f) {
  std::ostringstream o;
  std::ostringstream e;
  const int rc = f(o, e);
  return {rc, o.str(), e.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s, bool skip_comments) {
  std::istringstream in(s);
  int n = 0;
  for (std::string l; std::getline(in, l);) n += (skip_comments && !l.empty() && l[0] == '#') ? 0 : 1;
  return n;
}

fs::path scratch(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("frobkit_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("verify targets") {
  const Config c = test_config();
  for (const auto& t : {"table1", "table2", "inertia", "disc", "n3", "n4", "cor-int2"}) {
    const auto r = capture([&](auto& o, auto& e) { return cmd_verify(t, c, o, e); });
    INFO(t << " " << r.err);
    CHECK(r.rc == kOk);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
  }
  CHECK(capture([&](auto& o, auto& e) { return cmd_verify("table9", c, o, e); }).rc == kUsage);
}

TEST_CASE("verify output is byte-identical across runs") {
  Config c = test_config();
  for (auto f : {Format::kJson, Format::kCsv}) {
    c.format = f;
    const auto a = capture([&](auto& o, auto& e) { return cmd_verify("prop-asai", c, o, e); });
    const auto b = capture([&](auto& o, auto& e) { return cmd_verify("prop-asai", c, o, e); });
    CHECK(a.rc == kOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("388821") != std::string::npos);
  }
}

TEST_CASE("report command") {
  Config c = test_config();
  const auto r2 = capture([&](auto& o, auto& e) { return cmd_report(2, c, o, e); });
  CHECK(r2.rc == kOk);
  CHECK(r2.out.find("\"class\": \"(1,5)(2,3,4)\"") != std::string::npos);
  CHECK(r2.out.find("\"N_p\": 0") != std::string::npos);
  const auto r5 = capture([&](auto& o, auto& e) { return cmd_report(5, c, o, e); });
  CHECK(r5.out.find("\"class\": \"(1,3,5,4,2)\"") != std::string::npos);
  const auto r151 = capture([&](auto& o, auto& e) { return cmd_report(151, c, o, e); });
  CHECK(r151.rc == kRamified);
  CHECK(r151.err.find("ramified") != std::string::npos);
  CHECK(capture([&](auto& o, auto& e) { return cmd_report(9, c, o, e); }).rc == kUsage);
  c.data_dir = "/nonexistent";
  CHECK(capture([&](auto& o, auto& e) { return cmd_report(7, c, o, e); }).rc == kUsage);
  CHECK(capture([&](auto& o, auto& e) { return cmd_verify("cor-int2", c, o, e); }).rc == kUsage);
  // Targets that do not read h still run.
  CHECK(capture([&](auto& o, auto& e) { return cmd_verify("table1", c, o, e); }).rc == kOk);
}

TEST_CASE("sweep command") {
  Config c = test_config();
  c.format = Format::kCsv;
  const auto s100 = capture([&](auto& o, auto& e) { return cmd_sweep(100, c, o, e); });
  CHECK(s100.rc == kOk);
  // Header plus one row per prime up to 100 other than 19.
  CHECK(count_lines(s100.out, true) == 1 + 24);
  CHECK(s100.out.find("\n2,3 2,6,,\"(1,5)(2,3,4)\",,0,-1,1,-1,PP") != std::string::npos);
  const auto s1 = capture([&](auto& o, auto& e) { return cmd_sweep(1, c, o, e); });
  CHECK(s1.rc == kOk);
  CHECK(count_lines(s1.out, true) == 1);
  const auto again = capture([&](auto& o, auto& e) { return cmd_sweep(100, c, o, e); });
  CHECK(again.out == s100.out);
}

TEST_CASE("cache round trip and silent rebuild") {
  const auto dir = scratch("cache");
  Config c = test_config();
  c.format = Format::kCsv;
  c.cache_path = (dir / "types.cache").string();

  const auto fresh = capture([&](auto& o, auto& e) { return cmd_sweep(500, c, o, e); });
  REQUIRE(fs::exists(c.cache_path));
  const std::string good = slurp(c.cache_path);
  REQUIRE(deserialize(good).has_value());

  const auto hit = capture([&](auto& o, auto& e) { return cmd_sweep(500, c, o, e); });
  CHECK(hit.out == fresh.out);

  // Flip one cycle type inside the body; the trailing checksum no longer matches.
  std::string bad = good;
  const auto pos = bad.find("\n7|");
  REQUIRE(pos != std::string::npos);
  bad[pos + 3] = bad[pos + 3] == '5' ? '4' : '5';
  std::ofstream(c.cache_path, std::ios::binary | std::ios::trunc) << bad;
  CHECK_FALSE(deserialize(bad).has_value());
  const auto rebuilt = capture([&](auto& o, auto& e) { return cmd_sweep(500, c, o, e); });
  CHECK(rebuilt.out == fresh.out);
  CHECK(rebuilt.err.empty());
  CHECK(slurp(c.cache_path) == good);

  // Truncated file.
  std::ofstream(c.cache_path, std::ios::binary | std::ios::trunc) << good.substr(0, good.size() / 2);
  CHECK(capture([&](auto& o, auto& e) { return cmd_sweep(500, c, o, e); }).out == fresh.out);
  CHECK(slurp(c.cache_path) == good);

  // Older version with a valid checksum.
  std::string old = good.substr(0, good.rfind("end "));
  old.replace(old.find(" 1\n"), 3, " 0\n");
  std::ofstream(c.cache_path, std::ios::binary | std::ios::trunc)
      << old << "end " << frobkit::frobenius::fnv1a(old) << '\n';
  CHECK_FALSE(deserialize(slurp(c.cache_path)).has_value());
  CHECK(capture([&](auto& o, auto& e) { return cmd_sweep(500, c, o, e); }).out == fresh.out);
  CHECK(slurp(c.cache_path) == good);
  fs::remove_all(dir);
}

TEST_CASE("cache tied to the data checksum") {
  const auto dir = scratch("data");
  for (const char* f : {"f5.poly", "g.poly", "h.poly"}) {
    fs::copy_file(fs::path(FROBKIT_TEST_DATA_DIR) / f, dir / f);
  }
  Config c = test_config();
  c.data_dir = dir.string();
  c.cache_path = (dir / "types.cache").string();
  const frobkit::frobenius::Pipeline pl(frobkit::frobenius::load_data_bundle(c.data_dir));
  CacheOutcome how{};
  load_or_build(c.cache_path, pl, 300, &how);
  CHECK(how == CacheOutcome::kRebuilt);
  load_or_build(c.cache_path, pl, 300, &how);
  CHECK(how == CacheOutcome::kHit);
  load_or_build(c.cache_path, pl, 200, &how);
  CHECK(how == CacheOutcome::kHit);
  load_or_build(c.cache_path, pl, 400, &how);
  CHECK(how == CacheOutcome::kRebuilt);

  // A comment change alters the checksum but not the polynomials.
  std::ofstream(dir / "f5.poly", std::ios::app) << "# touched\n";
  const frobkit::frobenius::Pipeline pl2(frobkit::frobenius::load_data_bundle(c.data_dir));
  CHECK(pl2.data().checksum != pl.data().checksum);
  const auto t = load_or_build(c.cache_path, pl2, 300, &how);
  CHECK(how == CacheOutcome::kRebuilt);
  CHECK(t.data_checksum == pl2.data().checksum);
  load_or_build("", pl2, 50, &how);
  CHECK(how == CacheOutcome::kDisabled);
  fs::remove_all(dir);
}

TEST_CASE("qseries command") {
  Config c = test_config();
  c.n_coeff = 5;
  const auto r = capture([&](auto& o, auto& e) { return cmd_qseries(c, o, e); });
  CHECK(r.rc == kOk);
  CHECK(r.out == "n,a_n,tau_mod_23\n1,1,1\n2,-1,22\n3,-1,22\n4,0,0\n5,0,0\n");
  c.n_coeff = 0;
  CHECK(capture([&](auto& o, auto& e) { return cmd_qseries(c, o, e); }).rc == kUsage);
}

TEST_CASE("csv quoting and config") {
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("x\"y") == "\"x\"\"y\"");
  CHECK(csv_field("plain") == "plain");
  CHECK(parse_format("csv") == Format::kCsv);
  CHECK_THROWS_AS(parse_format("xml"), frobkit::DomainError);
  const auto j = to_json(default_config());
  CHECK(j.at("pmax") == 100000);
  CHECK(j.at("n_coeff") == 5000);
  CHECK_FALSE(j.contains("cache"));
}
