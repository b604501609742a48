#pragma once

#include <stdexcept>
#include <string>

namespace nilpair {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or ambient-dimension mismatch between operands.
struct DimensionError : Error {
  using Error::Error;
};

/// Malformed user input (parse errors, invalid type/rank, bad labels).
struct InputError : Error {
  using Error::Error;
};

/// An operator fails a spectral requirement ("not semisimple",
/// "irrational spectrum").
struct SpectrumError : Error {
  using Error::Error;
};

/// The characteristic solver found no acceptable solution; carries the
/// failing stage.
struct SolveError : Error {
  SolveError(int stage, const std::string& what)
      : Error("characteristic solver stage " + std::to_string(stage) + ": " + what),
        stage(stage) {}
  int stage;
};

}  // namespace nilpair
