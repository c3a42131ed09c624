#pragma once

#include <stdexcept>
#include <string>

namespace cauchymix {

/// Base class for every library error.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Multiplicative inverse requested for a series with zero constant term.
struct DivisionByNonUnit : Error {
  using Error::Error;
};

/// Composition with an inner series that has a nonzero constant term.
struct ComposeWithUnit : Error {
  using Error::Error;
};

/// Compositional inverse requested for a series that is not a delta series.
struct NotDelta : Error {
  using Error::Error;
};

/// Stirling-style index outside the triangular range 0 <= l <= n.
struct IndexRange : Error {
  using Error::Error;
};

/// Frobenius-Euler parameter lambda equals 1.
struct LambdaUnit : Error {
  using Error::Error;
};

/// Multinomial parts do not sum to the top index.
struct MultinomialMismatch : Error {
  using Error::Error;
};

/// A pairing or operator application needs a longer truncation than supplied.
struct TruncationTooShort : Error {
  using Error::Error;
};

/// Parameters outside the stated domain of an identity.
struct ParamDomain : Error {
  using Error::Error;
};

/// An expansion that is only defined for r >= 1 was asked for r = 0.
struct RequiresPositiveR : ParamDomain {
  using ParamDomain::ParamDomain;
};

/// Invalid verification-grid configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace cauchymix
