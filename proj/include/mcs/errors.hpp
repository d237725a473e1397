#pragma once

#include <stdexcept>
#include <string>

namespace mcs {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntactic problem in an instance file (bad header, non-integer token, ...).
struct ParseError : Error {
  using Error::Error;
};

// Structurally well-formed input that violates an instance invariant
// (cycle, disconnected, color out of range, wrong edge count, ...).
struct ValidationError : Error {
  using Error::Error;
};

// An exhaustive routine was asked to run past its configured cap.
struct InstanceTooLarge : Error {
  using Error::Error;
};

// Malformed generator specification.
struct InvalidSpec : Error {
  using Error::Error;
};

// The solver produced a witness that fails verification. Signals an
// implementation bug; never swallowed.
struct InternalInconsistency : Error {
  using Error::Error;
};

// A traceback reference points at a tuple that is not in its table.
struct CorruptTable : Error {
  using Error::Error;
};

}  // namespace mcs
