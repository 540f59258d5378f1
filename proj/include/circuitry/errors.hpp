#pragma once

#include <stdexcept>
#include <string>

namespace circuitry {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A circuit family failed validation (empty member, nested circuits,
/// or a missing elimination witness). `kind` names the failed check.
struct AxiomViolation : Error {
    AxiomViolation(std::string kind_, std::string witness_)
        : Error("axiom violation [" + kind_ + "]: " + witness_),
          kind(std::move(kind_)),
          witness(std::move(witness_)) {}
    std::string kind;
    std::string witness;
};

/// An exhaustive enumeration would exceed the configured caps.
struct SizeLimit : Error {
    using Error::Error;
};

/// paint() was given sets that do not partition E minus the element.
struct BadPartition : Error {
    using Error::Error;
};

/// Operation requires a binary underlying matroid.
struct NotBinary : Error {
    using Error::Error;
};

/// Sign data could not be extracted as a valid orientation.
struct NotOrientable : Error {
    using Error::Error;
};

/// A supplied or derived signature failed orthogonality verification.
struct InconsistentSignature : Error {
    using Error::Error;
};

/// A guaranteed-by-theory search came up empty or double: the input data
/// violates an invariant the caller promised.
struct InternalInvariantBroken : Error {
    using Error::Error;
};

/// Instance text could not be parsed; `line` is 1-based.
struct ParseError : Error {
    ParseError(int line_, const std::string& what_)
        : Error("parse error at line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
    int line;
};

}  // namespace circuitry
