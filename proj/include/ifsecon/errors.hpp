#pragma once

#include <stdexcept>
#include <string>

namespace ifsecon {

/// Bad input: wrong dimension, empty set, out-of-range parameter.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A map whose Lipschitz constant is not in (0, 1).
class NotContractive : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// An operation needs the probability vector of a random function system.
class MissingProbability : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Preimage requested for a singular affine map.
class CannotInvert : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidArgument(what);
}

}  // namespace ifsecon
