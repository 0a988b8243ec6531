#include "frobkit/poly/cycle_type.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "frobkit/errors.hpp"

namespace frobkit::poly {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw DomainError("cycle type: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::of_permutation(std::span<const std::uint16_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

int CycleType::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int CycleType::count(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string CycleType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

CycleType CycleType::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<int> parts;
  while (in >> tok) {
    auto caret = tok.find('^');
    try {
      std::size_t used = 0;
      int part = std::stoi(tok.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? tok.size() : caret)) throw ParseError(tok);
      int mult = 1;
      if (caret != std::string::npos) {
        std::string rest = tok.substr(caret + 1);
        mult = std::stoi(rest, &used);
        if (used != rest.size()) throw ParseError(tok);
      }
      if (part <= 0 || mult <= 0) throw ParseError(tok);
      parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    } catch (const std::logic_error&) {
      throw ParseError("cycle type: bad token '" + tok + "'");
    }
  }
  return CycleType(std::move(parts));
}

}  // namespace frobkit::poly
