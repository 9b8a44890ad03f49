#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

/// A constructed object violates one of its defining identities. The message
/// names the clause; `witness` carries a rendered counterexample.
class InvariantFailure : public Error {
public:
    InvariantFailure(const std::string& clause, std::string witness = {})
        : Error(witness.empty() ? clause : clause + " (witness: " + witness + ")"),
          clause_(clause), witness_(std::move(witness)) {}
    const std::string& clause() const { return clause_; }
    const std::string& witness() const { return witness_; }

private:
    std::string clause_;
    std::string witness_;
};

// Named failures of specific constructions; each carries a witness like InvariantFailure.
#define NCG_WITNESSED_ERROR(Name)                                                  \
    class Name : public InvariantFailure {                                       \
    public:                                                                      \
        using InvariantFailure::InvariantFailure;                                \
    };
NCG_WITNESSED_ERROR(NotAForm)
NCG_WITNESSED_ERROR(NotFree)
NCG_WITNESSED_ERROR(NotGalois)
NCG_WITNESSED_ERROR(NotAssociative)
NCG_WITNESSED_ERROR(NotCanonicalForm)
NCG_WITNESSED_ERROR(BianchiFailure)
NCG_WITNESSED_ERROR(HopfAxiomFailure)
NCG_WITNESSED_ERROR(EntwiningAxiomFailure)
#undef NCG_WITNESSED_ERROR

/// Two independent evaluations of the same statement disagree; indicates a bug, not bad input.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// The input parsed but lacks a structure the requested verification needs (e.g. failing Hopf axioms).
class AxiomPrecheckError : public Error {
public:
    using Error::Error;
};

}  // namespace ncg
