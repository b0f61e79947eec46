#pragma once

#include <stdexcept>
#include <string>

namespace qes {

/// Base class for all computational failures raised by this library.
/// Precondition violations (bad J, bad variant/parameter combinations)
/// throw std::invalid_argument instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Root refinement failed to reach the requested precision within the
/// iteration cap. Usually a signal to raise the working precision.
struct NonConvergence : Error { using Error::Error; };

/// The trailing recursion row is not satisfied: the supplied energy is
/// not an eigenvalue of the quasi-exact sector to working tolerance.
struct NotAnEigenvalue : Error { using Error::Error; };

/// Envelope exponent exceeds the representable range at a grid point.
struct Overflow : Error { using Error::Error; };

/// gcd(p, p') is nonconstant: the polynomial has a repeated root, which
/// is exactly the coalescence signature at the symmetry boundary.
struct SquareFull : Error { using Error::Error; };

/// The initial bracket contains no real-root-count change (or J=1 was
/// requested, which has no broken/unbroken transition).
struct NoTransition : Error { using Error::Error; };

/// Exact resultant computation requested beyond the supported cap.
struct CapExceeded : Error { using Error::Error; };

/// Sequence too short for the requested extrapolation depth.
struct TooShort : Error { using Error::Error; };

/// Factorization parameter in the regime with no real double turning point.
struct ComplexRegime : Error { using Error::Error; };

/// The scaled potential has no real turning points at this energy.
struct NoRealTurningPoints : Error { using Error::Error; };

/// Integrand went negative between the chosen turning points, which
/// signals an inconsistent (b, F) pairing.
struct NegativeIntegrand : Error { using Error::Error; };

/// No root of the quantization condition inside the search bracket.
struct NoRoot : Error { using Error::Error; };

/// The reduction-of-order base solution vanishes inside the interval.
struct NodeInInterval : Error { using Error::Error; };

/// The spectrum is entirely real at the requested parameter value.
struct NotBroken : Error { using Error::Error; };

/// Adaptive step control underflowed during ray integration.
struct StiffnessFailure : Error { using Error::Error; };

} // namespace qes
