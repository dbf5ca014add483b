#pragma once

#include <stdexcept>

namespace cotrans {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word refers to a generator the presentation does not have, or is
// otherwise not a valid word over it.
struct MalformedWordError : Error {
  using Error::Error;
};

// Operation not defined for the given presentation / form.
struct UnsupportedOperationError : Error {
  using Error::Error;
};

// Pair of groupoid elements is not composable.
struct ComposabilityError : Error {
  using Error::Error;
};

// Transform applied to or compared across the wrong space.
struct SpaceMismatchError : Error {
  using Error::Error;
};

// Invalid configuration value (empty test-point set, bad angle sum, ...).
struct ConfigError : Error {
  using Error::Error;
};

// A rule-backed generator map has no value at a required base point.
struct IncompleteDefinitionError : Error {
  using Error::Error;
};

// A construction precondition failed on a sample; the message carries the
// witness.
struct RejectedConstructionError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

struct NumericOverflowError : Error {
  using Error::Error;
};

// Value outside a configured window or horizon.
struct RangeError : Error {
  using Error::Error;
};

// Data violates an invariant it was assumed to have (non-idempotent units
// value, rank changing across samples, inadmissible hull slice).
struct InconsistencyError : Error {
  using Error::Error;
};

}  // namespace cotrans
