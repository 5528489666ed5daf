#pragma once

#include <stdexcept>
#include <string>

namespace ht {

/// Base class for all failures signalled by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary operation on elements carrying different scales t.
struct ScaleMismatch : Error {
    using Error::Error;
};

/// Element (or factor) with |det| at or below the inversion tolerance.
/// For t > 0 this is how the null cone shows up.
struct NonInvertible : Error {
    using Error::Error;
};

/// Power series whose constant term cannot be inverted.
struct NonInvertibleConstantTerm : NonInvertible {
    using NonInvertible::NonInvertible;
};

/// Realization inverse requested with a singular D block.
struct NonInvertibleD : NonInvertible {
    using NonInvertible::NonInvertible;
};

/// Neither Schur pivot block of a matrix admitted a recursive inverse.
/// Sufficient-condition semantics: this does not prove singularity.
struct NoInvertiblePivot : Error {
    using Error::Error;
};

/// Operator norm >= 1 where a strict contraction is required.
struct NotContractive : Error {
    using Error::Error;
};

/// Square-root argument 1 + eps with ||eps|| >= 1.
struct NotContractivePerturbation : Error {
    using Error::Error;
};

/// Point outside the open unit operator ball.
struct NotInUnitBall : Error {
    using Error::Error;
};

/// Division of a series that does not vanish at the prescribed point.
struct NotAZero : Error {
    using Error::Error;
};

/// ||alpha||^2 / (1 - ||alpha||^2) >= 1 in the bracket Blaschke setup.
struct SmallnessViolated : Error {
    using Error::Error;
};

/// Interpolation Gram matrix rejected by the block inversion.
struct GramNotInvertible : Error {
    using Error::Error;
};

/// Vector part with |det| below tolerance (genuine cone for t > 0).
struct OnNullCone : Error {
    using Error::Error;
};

/// Point outside the requested O_{r,rho} domain.
struct DomainViolation : Error {
    using Error::Error;
};

/// Symmetrized-product degree above the enumeration cap.
struct DegreeCap : Error {
    using Error::Error;
};

/// Blaschke admissibility condition sum_l ||mu_l(a)|| < 1 violated.
struct ConditionViolated : Error {
    using Error::Error;
};

/// Matrix operands with incompatible shapes.
struct DimensionMismatch : Error {
    using Error::Error;
};

} // namespace ht
