// errors.hpp
// Typed failure hierarchy. Every throwing operation in the library raises a
// subclass of Error so callers can distinguish bad input, resource caps, and
// genuinely undecided checks.
#pragma once

#include <stdexcept>
#include <string>

namespace lcfano {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input fails a structural precondition (wrong sizes, bad ranges, ...).
struct PreconditionFailed : Error {
    using Error::Error;
};

// Point set does not span the required affine dimension.
struct DegenerateInput : Error {
    using Error::Error;
};

// Simplex vertices are affinely dependent.
struct DegenerateSimplex : DegenerateInput {
    using DegenerateInput::DegenerateInput;
};

// An operation that needs 0 strictly inside the polytope was given one where
// it is not.
struct OriginNotInterior : Error {
    using Error::Error;
};

// Facet enumeration refuses vertex counts above the configured cap.
struct TooManyVertices : Error {
    using Error::Error;
};

// A lattice-point scan would visit more box points than the configured cap.
struct EnumerationTooLarge : Error {
    using Error::Error;
};

// A two-sided enclosure is too wide to decide a strict comparison.
struct IndecisiveEnclosure : Error {
    using Error::Error;
};

// Bounded search ended without a witness; reported, never asserted.
struct NotFound : Error {
    using Error::Error;
};

// Tuple entries must be positive and sum to one.
struct NotAProbabilityVector : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Grid step admits no feasible tuple.
struct GridTooCoarse : Error {
    using Error::Error;
};

// Polytope is not minimal (some vertex can be dropped).
struct NotMinimal : Error {
    using Error::Error;
};

// Decomposition requires a non-simplex input.
struct IsASimplex : Error {
    using Error::Error;
};

// Constructive decomposition search ran out of candidates.
struct SearchExhausted : Error {
    using Error::Error;
};

// A claimed decomposition fails validation.
struct InvalidDecomposition : Error {
    using Error::Error;
};

// Malformed serialized input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace lcfano
