#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobkit {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when a reduction mod p is not squarefree, or p is a known ramified prime.
struct RamifiedError : std::runtime_error {
  RamifiedError(std::uint64_t p, const std::string& what)
      : std::runtime_error(what), prime(p) {}
  std::uint64_t prime;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace frobkit
