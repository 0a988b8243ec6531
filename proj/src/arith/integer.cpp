#include "frobkit/arith/integer.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "frobkit/errors.hpp"

namespace frobkit::arith {

namespace {

constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
constexpr std::uint32_t kDecChunk = 1000000000U;  // 10^9

}  // namespace

Integer::Integer(std::int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Negate in unsigned space so INT64_MIN is handled.
  std::uint64_t m = v < 0 ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  mag_.push_back(static_cast<Limb>(m));
  if ((m >> 32) != 0) mag_.push_back(static_cast<Limb>(m >> 32));
}

Integer Integer::from_u64(std::uint64_t v) {
  Integer r;
  if (v == 0) return r;
  r.sign_ = 1;
  r.mag_.push_back(static_cast<Limb>(v));
  if ((v >> 32) != 0) r.mag_.push_back(static_cast<Limb>(v >> 32));
  return r;
}

Integer Integer::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw ParseError("integer: no digits in '" + std::string(text) + "'");
  Integer r;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("integer: unexpected character in '" + std::string(text) + "'");
    }
  }
  // Consume in chunks of 9 digits: r = r * 10^k + chunk.
  std::size_t i = pos;
  std::size_t first = (text.size() - pos) % 9;
  if (first == 0) first = 9;
  while (i < text.size()) {
    std::size_t len = (i == pos) ? first : 9;
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (std::size_t k = 0; k < len; ++k) {
      chunk = chunk * 10 + static_cast<std::uint32_t>(text[i + k] - '0');
      scale *= 10;
    }
    i += len;
    std::uint64_t carry = chunk;
    for (auto& limb : r.mag_) {
      std::uint64_t t = static_cast<std::uint64_t>(limb) * scale + carry;
      limb = static_cast<Limb>(t);
      carry = t >> 32;
    }
    if (carry != 0) r.mag_.push_back(static_cast<Limb>(carry));
  }
  r.sign_ = 1;
  r.trim();
  if (negative && r.sign_ != 0) r.sign_ = -1;
  return r;
}

std::string Integer::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<Limb> m = mag_;
  std::vector<std::uint32_t> chunks;
  while (!m.empty()) {
    chunks.push_back(divmod_small(m, kDecChunk));
    while (!m.empty() && m.back() == 0) m.pop_back();
  }
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(chunks.back());
  for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
    std::string part = std::to_string(*it);
    out.append(9 - part.size(), '0');
    out += part;
  }
  return out;
}

std::size_t Integer::bit_length() const {
  if (mag_.empty()) return 0;
  return (mag_.size() - 1) * 32 + static_cast<std::size_t>(std::bit_width(mag_.back()));
}

bool Integer::fits_int64() const {
  if (mag_.size() > 2) return false;
  std::uint64_t m = 0;
  if (!mag_.empty()) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
  if (sign_ >= 0) return m <= static_cast<std::uint64_t>(INT64_MAX);
  return m <= static_cast<std::uint64_t>(INT64_MAX) + 1;
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw DomainError("integer: value does not fit in 64 bits");
  std::uint64_t m = 0;
  if (!mag_.empty()) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
  if (sign_ < 0) return static_cast<std::int64_t>(~m + 1);
  return static_cast<std::int64_t>(m);
}

Integer Integer::operator-() const {
  Integer r = *this;
  r.sign_ = -r.sign_;
  return r;
}

Integer Integer::abs() const {
  Integer r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

void Integer::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int Integer::cmp_mag(const std::vector<Limb>& a, const std::vector<Limb>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void Integer::add_mag(std::vector<Limb>& a, const std::vector<Limb>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  std::uint64_t carry = 0;
  std::size_t i = 0;
  for (; i < b.size(); ++i) {
    std::uint64_t t = static_cast<std::uint64_t>(a[i]) + b[i] + carry;
    a[i] = static_cast<Limb>(t);
    carry = t >> 32;
  }
  for (; carry != 0 && i < a.size(); ++i) {
    std::uint64_t t = static_cast<std::uint64_t>(a[i]) + carry;
    a[i] = static_cast<Limb>(t);
    carry = t >> 32;
  }
  if (carry != 0) a.push_back(static_cast<Limb>(carry));
}

void Integer::sub_mag(std::vector<Limb>& a, const std::vector<Limb>& b) {
  std::int64_t borrow = 0;
  std::size_t i = 0;
  for (; i < b.size(); ++i) {
    std::int64_t t = static_cast<std::int64_t>(a[i]) - b[i] - borrow;
    borrow = t < 0 ? 1 : 0;
    a[i] = static_cast<Limb>(t + (borrow != 0 ? static_cast<std::int64_t>(kBase) : 0));
  }
  for (; borrow != 0 && i < a.size(); ++i) {
    std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow;
    borrow = t < 0 ? 1 : 0;
    a[i] = static_cast<Limb>(t + (borrow != 0 ? static_cast<std::int64_t>(kBase) : 0));
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void Integer::rsub_mag(std::vector<Limb>& a, const std::vector<Limb>& b) {
  a.resize(b.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::int64_t t = static_cast<std::int64_t>(b[i]) - a[i] - borrow;
    borrow = t < 0 ? 1 : 0;
    a[i] = static_cast<Limb>(t + (borrow != 0 ? static_cast<std::int64_t>(kBase) : 0));
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void Integer::add_signed(const Integer& rhs, int rhs_sign) {
  if (rhs_sign == 0) return;
  if (sign_ == 0) {
    mag_ = rhs.mag_;
    sign_ = rhs_sign;
    return;
  }
  if (sign_ == rhs_sign) {
    add_mag(mag_, rhs.mag_);
    return;
  }
  int c = cmp_mag(mag_, rhs.mag_);
  if (c == 0) {
    mag_.clear();
    sign_ = 0;
  } else if (c > 0) {
    sub_mag(mag_, rhs.mag_);
  } else {
    rsub_mag(mag_, rhs.mag_);
    sign_ = rhs_sign;
  }
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (this == &rhs) {
    Integer copy = rhs;
    add_signed(copy, copy.sign_);
  } else {
    add_signed(rhs, rhs.sign_);
  }
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (this == &rhs) {
    mag_.clear();
    sign_ = 0;
    return *this;
  }
  add_signed(rhs, -rhs.sign_);
  return *this;
}

std::vector<Integer::Limb> Integer::mul_mag(const std::vector<Limb>& a,
                                            const std::vector<Limb>& b) {
  std::vector<Limb> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = ai * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<Limb>(t);
      carry = t >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t t = static_cast<std::uint64_t>(r[k]) + carry;
      r[k] = static_cast<Limb>(t);
      carry = t >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Integer operator*(const Integer& a, const Integer& b) {
  Integer r;
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  r.mag_ = Integer::mul_mag(a.mag_, b.mag_);
  r.sign_ = a.sign_ * b.sign_;
  return r;
}

Integer& Integer::operator*=(const Integer& rhs) {
  *this = *this * rhs;
  return *this;
}

void Integer::add_product(const Integer& a, const Integer& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return;
  Integer prod;
  prod.mag_ = mul_mag(a.mag_, b.mag_);
  prod.sign_ = a.sign_ * b.sign_;
  add_signed(prod, prod.sign_);
}

Integer::Limb Integer::divmod_small(std::vector<Limb>& a, Limb d) {
  std::uint64_t rem = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | a[i];
    a[i] = static_cast<Limb>(cur / d);
    rem = cur % d;
  }
  return static_cast<Limb>(rem);
}

// Knuth, TAOCP vol. 2, 4.3.1 Algorithm D. Requires b non-empty.
void Integer::divmod_mag(const std::vector<Limb>& a, const std::vector<Limb>& b,
                         std::vector<Limb>& q, std::vector<Limb>& r) {
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  if (b.size() == 1) {
    q = a;
    Limb rem = divmod_small(q, b[0]);
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem != 0) r.push_back(rem);
    return;
  }
  const std::size_t n = b.size();
  const std::size_t m = a.size() - n;
  const int s = std::countl_zero(b.back());
  std::vector<Limb> bn(n);
  std::vector<Limb> an(a.size() + 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    bn[i] = (b[i] << s) | (s == 0 ? 0 : static_cast<Limb>(static_cast<std::uint64_t>(b[i - 1]) >> (32 - s)));
  }
  bn[0] = b[0] << s;
  an[a.size()] = s == 0 ? 0 : static_cast<Limb>(static_cast<std::uint64_t>(a.back()) >> (32 - s));
  for (std::size_t i = a.size() - 1; i > 0; --i) {
    an[i] = (a[i] << s) | (s == 0 ? 0 : static_cast<Limb>(static_cast<std::uint64_t>(a[i - 1]) >> (32 - s)));
  }
  an[0] = a[0] << s;

  q.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num = (static_cast<std::uint64_t>(an[j + n]) << 32) | an[j + n - 1];
    std::uint64_t qhat = num / bn[n - 1];
    std::uint64_t rhat = num % bn[n - 1];
    while (qhat >= kBase || qhat * bn[n - 2] > ((rhat << 32) | an[j + n - 2])) {
      --qhat;
      rhat += bn[n - 1];
      if (rhat >= kBase) break;
    }
    // Multiply and subtract.
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * bn[i] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(an[i + j]) - borrow - static_cast<std::int64_t>(p & 0xFFFFFFFFULL);
      an[i + j] = static_cast<Limb>(t);
      borrow = t < 0 ? 1 : 0;
    }
    std::int64_t t = static_cast<std::int64_t>(an[j + n]) - borrow - static_cast<std::int64_t>(carry);
    an[j + n] = static_cast<Limb>(t);
    if (t < 0) {
      // Add back.
      --qhat;
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = static_cast<std::uint64_t>(an[i + j]) + bn[i] + c;
        an[i + j] = static_cast<Limb>(sum);
        c = sum >> 32;
      }
      an[j + n] = static_cast<Limb>(static_cast<std::uint64_t>(an[j + n]) + c);
    }
    q[j] = static_cast<Limb>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  r.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (an[i] >> s) | (s == 0 ? 0 : static_cast<Limb>(static_cast<std::uint64_t>(an[i + 1]) << (32 - s)));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

std::pair<Integer, Integer> Integer::divmod(const Integer& a, const Integer& b) {
  if (b.sign_ == 0) throw DomainError("integer: division by zero");
  Integer q;
  Integer r;
  divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  return {std::move(q), std::move(r)};
}

Integer& Integer::operator/=(const Integer& rhs) {
  *this = divmod(*this, rhs).first;
  return *this;
}

Integer& Integer::operator%=(const Integer& rhs) {
  *this = divmod(*this, rhs).second;
  return *this;
}

std::uint32_t Integer::mod_u32(std::uint32_t m) const {
  if (m == 0) throw DomainError("integer: modulus zero");
  std::uint64_t rem = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    rem = ((rem << 32) | mag_[i]) % m;
  }
  if (sign_ < 0 && rem != 0) rem = m - rem;
  return static_cast<std::uint32_t>(rem);
}

std::uint64_t Integer::mod_u64(std::uint64_t m) const {
  if (m == 0) throw DomainError("integer: modulus zero");
  unsigned __int128 rem = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    rem = ((rem << 32) | mag_[i]) % m;
  }
  auto r = static_cast<std::uint64_t>(rem);
  if (sign_ < 0 && r != 0) r = m - r;
  return r;
}

Integer Integer::div_u32(std::uint32_t d) const {
  if (d == 0) throw DomainError("integer: division by zero");
  Integer q = *this;
  divmod_small(q.mag_, d);
  q.trim();
  return q;
}

Integer& Integer::shift_right(std::size_t bits) {
  std::size_t limbs = bits / 32;
  unsigned s = static_cast<unsigned>(bits % 32);
  if (limbs >= mag_.size()) {
    mag_.clear();
    sign_ = 0;
    return *this;
  }
  mag_.erase(mag_.begin(), mag_.begin() + static_cast<std::ptrdiff_t>(limbs));
  if (s != 0) {
    for (std::size_t i = 0; i < mag_.size(); ++i) {
      Limb hi = i + 1 < mag_.size() ? mag_[i + 1] : 0;
      mag_[i] = (mag_[i] >> s) | (hi << (32 - s));
    }
  }
  trim();
  return *this;
}

Integer Integer::pow(Integer base, unsigned exponent) {
  Integer result = 1;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

Integer Integer::gcd(Integer a, Integer b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  int c = Integer::cmp_mag(a.mag_, b.mag_);
  if (a.sign_ < 0) c = -c;
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace frobkit::arith
