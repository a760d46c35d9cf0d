#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conntop {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cardinal comparison whose answer is independent of ZFC (the
// successor-vs-power links of the beth tower).
struct UndecidableComparison : Error {
  using Error::Error;
};

// 2^(kappa+) falls outside the decidable cardinal fragment.
struct SuccNotSupported : Error {
  using Error::Error;
};

struct InvalidModulus : Error {
  using Error::Error;
};

struct InvalidPrime : Error {
  using Error::Error;
};

struct InvalidMultiplier : Error {
  using Error::Error;
};

struct NotBounded : Error {
  using Error::Error;
};

struct TrivialGroup : Error {
  using Error::Error;
};

struct NotFinite : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

struct BaseMismatch : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

struct KappaTooSmall : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

}  // namespace conntop
