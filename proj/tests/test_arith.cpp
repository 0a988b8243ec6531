#include <cstdint>
#include <random>
#include <string>

#include "doctest.h"
#include "frobkit/arith/fields.hpp"
#include "frobkit/arith/integer.hpp"
#include "frobkit/arith/modular.hpp"
#include "frobkit/errors.hpp"

using frobkit::arith::F25;
using frobkit::arith::Integer;
using frobkit::arith::kronecker;

namespace {

// Schoolbook long division of a decimal string by a small modulus.
std::uint64_t decimal_mod(const std::string& digits, std::uint64_t m) {
  std::uint64_t r = 0;
  for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % m;
  return r;
}

// Euler's criterion for an odd prime p.
int euler_symbol(std::int64_t a, std::uint64_t p) {
  std::uint64_t ar = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                                static_cast<std::int64_t>(p));
  if (ar == 0) return 0;
  std::uint64_t e = frobkit::arith::pow_mod(ar, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::string i128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (m != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace

TEST_CASE("parse_integer") {
  CHECK(Integer::parse("0") == Integer(0));
  CHECK(Integer::parse("-0").is_zero());
  CHECK(Integer::parse("3952905035040") == Integer(INT64_C(3952905035040)));
  CHECK(Integer::parse("-23") == Integer(-23));
  CHECK(Integer::parse("+17").to_string() == "17");
  CHECK(Integer::parse("000123").to_string() == "123");
  CHECK_THROWS_AS(Integer::parse(""), frobkit::ParseError);
  CHECK_THROWS_AS(Integer::parse("-"), frobkit::ParseError);
  CHECK_THROWS_AS(Integer::parse("12a"), frobkit::ParseError);
  CHECK_THROWS_AS(Integer::parse(" 12"), frobkit::ParseError);

  const std::string big =
      "786112384348491157946262458961641446402527499361470318381698303732895261132906305622481085003228484600548998";
  CHECK(Integer::parse(big).to_string() == big);
  CHECK(Integer::parse("-" + big).to_string() == "-" + big);
}

TEST_CASE("mod_reduce") {
  using frobkit::arith::mod_reduce;
  CHECK(mod_reduce(Integer(0), 7).value == 0);
  CHECK(decimal_mod("3952905035040", 7) == 3);
  CHECK(mod_reduce(Integer::parse("3952905035040"), 7).value == 3);
  CHECK(mod_reduce(Integer(-23), 5).value == 2);
  CHECK_THROWS_AS(mod_reduce(Integer(10), 9), frobkit::DomainError);
  CHECK_THROWS_AS(mod_reduce(Integer(10), 1), frobkit::DomainError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::string s = std::to_string(rng() % 9 + 1);
    for (int k = 0; k < 120; ++k) s += static_cast<char>('0' + rng() % 10);
    for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 65521ULL, 4294967291ULL}) {
      CHECK(mod_reduce(Integer::parse(s), p).value == decimal_mod(s, p));
    }
  }
}

TEST_CASE("kronecker examples") {
  for (std::int64_t n : {1, 2, 3, -5, 8, 1000, -1}) CHECK(kronecker(Integer(1), Integer(n)) == 1);
  CHECK(euler_symbol(-19, 5) == 1);
  CHECK(kronecker(Integer(-19), Integer(5)) == 1);
  CHECK(2869 % 8 == 5);
  CHECK(kronecker(Integer(2869), Integer(2)) == -1);
  CHECK(kronecker(Integer(3), Integer(0)) == 0);
  CHECK(kronecker(Integer(-1), Integer(0)) == 1);
  CHECK(kronecker(Integer(4), Integer(2)) == 0);
  CHECK(kronecker(Integer(-1), Integer(-1)) == -1);
  CHECK(kronecker(Integer(5), Integer(-1)) == 1);
}

TEST_CASE("kronecker: Euler criterion cross-check on random pairs") {
  std::mt19937_64 rng(11);
  const auto primes = frobkit::arith::primes_up_to(20000);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t p = primes[1 + rng() % (primes.size() - 1)];
    std::int64_t a = static_cast<std::int64_t>(rng() % 2000000) - 1000000;
    if (a % static_cast<std::int64_t>(p) == 0) continue;
    REQUIRE(kronecker(Integer(a), Integer(static_cast<std::int64_t>(p))) == euler_symbol(a, p));
    REQUIRE(kronecker(a, static_cast<std::int64_t>(p)) == euler_symbol(a, p));
  }
}

TEST_CASE("kronecker: multiplicativity and agreement of the two overloads") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 5000; ++i) {
    std::int64_t a = static_cast<std::int64_t>(rng() % 2001) - 1000;
    std::int64_t b = static_cast<std::int64_t>(rng() % 2001) - 1000;
    std::int64_t n = static_cast<std::int64_t>(rng() % 4001) - 2000;
    const int ka = kronecker(Integer(a), Integer(n));
    const int kb = kronecker(Integer(b), Integer(n));
    REQUIRE(ka * kb == kronecker(Integer(a * b), Integer(n)));
    REQUIRE(kronecker(a, n) == ka);
    // Multiplicative in the lower argument too.
    std::int64_t m = static_cast<std::int64_t>(rng() % 401) - 200;
    if (m == 0 || n == 0) continue;
    REQUIRE(kronecker(Integer(a), Integer(n)) * kronecker(Integer(a), Integer(m)) ==
            kronecker(Integer(a), Integer(n * m)));
  }
}

TEST_CASE("primes_up_to") {
  using frobkit::arith::primes_up_to;
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(0).empty());
  CHECK(primes_up_to(10) == std::vector<std::uint32_t>{2, 3, 5, 7});
  auto p30 = primes_up_to(30);
  CHECK(p30.size() == 10);
  CHECK(p30.back() == 29);

  // Independent oracle: trial division.
  int count = 0;
  for (std::uint32_t n = 2; n <= 100000; ++n) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    count += prime ? 1 : 0;
  }
  CHECK(count == 9592);
  CHECK(primes_up_to(100000).size() == 9592);
}

TEST_CASE("is_prime") {
  using frobkit::arith::is_prime;
  for (auto p : frobkit::arith::primes_up_to(5000)) CHECK(is_prime(p));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(UINT64_C(3215031751)));
  CHECK(is_prime(UINT64_C(18446744073709551557)));
  CHECK_FALSE(is_prime(UINT64_C(18446744073709551555)));
}

TEST_CASE("Integer agrees with native arithmetic below 2^63") {
  std::mt19937_64 rng(42);
  auto draw = [&]() {
    std::int64_t bits = static_cast<std::int64_t>(rng() % 63);
    std::int64_t v = static_cast<std::int64_t>(rng() >> 1) >> (62 - bits);
    return (rng() & 1U) != 0 ? -v : v;
  };
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t a = draw();
    const std::int64_t b = draw();
    const Integer A(a);
    const Integer B(b);
    REQUIRE(A.to_int64() == a);
    REQUIRE(A.to_string() == std::to_string(a));
    REQUIRE((A + B).to_string() == i128_to_string(static_cast<__int128>(a) + b));
    REQUIRE((A - B).to_string() == i128_to_string(static_cast<__int128>(a) - b));
    REQUIRE((A * B).to_string() == i128_to_string(static_cast<__int128>(a) * b));
    REQUIRE(((A < B) == (a < b)));
    REQUIRE(((A == B) == (a == b)));
    if (b != 0) {
      REQUIRE((A / B).to_int64() == a / b);
      REQUIRE((A % B).to_int64() == a % b);
    }
  }
}

TEST_CASE("Integer multi-limb division identity") {
  std::mt19937_64 rng(5);
  auto random_big = [&](int digits) {
    std::string s = std::to_string(rng() % 9 + 1);
    for (int k = 1; k < digits; ++k) s += static_cast<char>('0' + rng() % 10);
    return (rng() & 1U) != 0 ? Integer::parse("-" + s) : Integer::parse(s);
  };
  for (int i = 0; i < 2000; ++i) {
    Integer a = random_big(1 + static_cast<int>(rng() % 120));
    Integer b = random_big(1 + static_cast<int>(rng() % 60));
    auto [q, r] = Integer::divmod(a, b);
    REQUIRE(q * b + r == a);
    REQUIRE(r.abs() < b.abs());
    REQUIRE((r.is_zero() || r.sign() == a.sign()));
  }
  CHECK_THROWS_AS(Integer::divmod(Integer(1), Integer(0)), frobkit::DomainError);
}

TEST_CASE("Integer pow and gcd") {
  CHECK(Integer::pow(Integer(2), 64).to_string() == "18446744073709551616");
  CHECK(Integer::pow(Integer(-3), 3) == Integer(-27));
  CHECK(Integer::gcd(Integer(-12), Integer(18)) == Integer(6));
  CHECK(Integer::gcd(Integer(0), Integer(0)).is_zero());
  CHECK(Integer(INT64_MIN).to_string() == "-9223372036854775808");
  CHECK(Integer(INT64_MIN).fits_int64());
  CHECK_FALSE((-Integer(INT64_MIN)).fits_int64());
}

TEST_CASE("F25 field axioms") {
  const F25 z = F25::zeta();
  CHECK(z * z == F25(2, 0));
  CHECK(z.pow(4) == F25(4, 0));
  CHECK(z.pow(8) == F25::one());
  for (int k = 1; k < 8; ++k) CHECK(z.pow(static_cast<std::uint64_t>(k)) != F25::one());
  for (std::uint32_t c = 0; c < 25; ++c) {
    const F25 x = F25::from_code(c);
    CHECK(x.code() == c);
    if (x.is_zero()) {
      CHECK_THROWS_AS(x.inverse(), frobkit::DomainError);
      continue;
    }
    CHECK(x * x.inverse() == F25::one());
    CHECK(x.pow(24) == F25::one());
  }
  // Distributivity over all triples.
  for (std::uint32_t a = 0; a < 25; ++a) {
    for (std::uint32_t b = 0; b < 25; ++b) {
      for (std::uint32_t c = 0; c < 25; c += 3) {
        F25 x = F25::from_code(a), y = F25::from_code(b), w = F25::from_code(c);
        REQUIRE(x * (y + w) == x * y + x * w);
        REQUIRE((x * y) * w == x * (y * w));
      }
    }
  }
  CHECK(F25(4, 0).to_string() == "4");
  CHECK(F25(0, 2).to_string() == "2z");
  CHECK(F25(1, 1).to_string() == "1+z");
}
