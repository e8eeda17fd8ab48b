#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsigma {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input data: bad permutations, bad automorphism actions,
/// violated operation preconditions.
struct ValidationError : Error {
  using Error::Error;
};

/// A closure grew past the configured order cap. Carries the number of
/// elements found before the construction was abandoned.
struct CapExceededError : Error {
  CapExceededError(const std::string& what, std::size_t partial)
      : Error(what), partial_count(partial) {}
  std::size_t partial_count;
};

/// Unparseable sigma specs, family specs, or group files.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace tsigma
