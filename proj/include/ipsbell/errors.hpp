#pragma once

#include <stdexcept>
#include <string>

namespace ipsbell {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter failed validation at construction (range, finiteness, ...).
struct InvalidParameter : Error {
    using Error::Error;
};

/// A Gaussian term cannot be integrated: u*v <= t^2.
struct NonIntegrableTerm : Error {
    using Error::Error;
};

/// A coefficient-table denominator x_j*y_j - 4 B^2 (1-tau_eff)^2 is not positive.
struct DegenerateDenominator : Error {
    using Error::Error;
};

/// Conditioning on a double click whose probability is (numerically) zero.
struct ZeroClickProbability : Error {
    using Error::Error;
};

/// A Fock-space cutoff is too small for the requested accuracy.
struct CutoffTooSmall : Error {
    using Error::Error;
};

/// A parity expectation left [-1, 1] beyond tolerance: the state is invalid.
struct InvalidParity : Error {
    using Error::Error;
};

} // namespace ipsbell
