#pragma once

#include <stdexcept>
#include <string>

namespace walpha {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

// Adding two DualVecs whose tails admit no common closed form.
struct ResultNotRepresentable : Error {
  using Error::Error;
};

// Representing-matrix denominator 1 - A(n+1) vanished.
struct DegenerateTail : Error {
  using Error::Error;
};

// Canonicalization for the block embedding could not place the largest
// |entry| at position 1.
struct MaxEntryInTail : Error {
  using Error::Error;
};

struct WrongKind : Error {
  using Error::Error;
};

struct SampleNotInSource : Error {
  using Error::Error;
};

struct StructureViolation : Error {
  using Error::Error;
};

struct PatternUnrecognized : Error {
  using Error::Error;
};

struct NormTooLarge : Error {
  using Error::Error;
};

struct NotAMember : Error {
  using Error::Error;
};

struct NotUnitNorm : Error {
  using Error::Error;
};

struct NotInSPlus : Error {
  using Error::Error;
};

struct WitnessInvalid : Error {
  using Error::Error;
};

}  // namespace walpha
