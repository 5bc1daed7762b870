#pragma once

#include <stdexcept>
#include <string>

namespace ncinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or semantically invalid user input (config, matrices, files).
struct InputError : Error {
  using Error::Error;
};

// A configured cap (group order, degree) would be exceeded.
struct CapExceeded : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotALieElement : Error {
  using Error::Error;
};

struct ArenaMismatch : Error {
  using Error::Error;
};

// Two independent computations of the same quantity disagreed.
struct OracleMismatch : Error {
  using Error::Error;
};

}  // namespace ncinv
