#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amalg/report.hpp"

namespace amalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input: bad labels, ill-formed JSON values,
/// violated preconditions. Maps to CLI exit code 2.
struct InvalidInput : Error {
    using Error::Error;
};

struct UniverseMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct SizeBoundExceeded : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NotAnEmbedding : Error {
    NotAnEmbedding(std::string msg, Report r) : Error(std::move(msg)), report(std::move(r)) {}
    Report report;
};

/// The theory falls outside the constructively covered dispatch.
/// `clause` names the first failed admissibility clause.
struct Inadmissible : Error {
    Inadmissible(std::string msg, std::string failedClause)
        : Error(std::move(msg)), clause(std::move(failedClause)) {}
    std::string clause;
};

/// A constructor produced something its own verifier rejects.
struct VerificationFailed : Error {
    VerificationFailed(std::string msg, Report r) : Error(std::move(msg)), report(std::move(r)) {}
    Report report;
};

struct NotAPosetExtension : Error {
    using Error::Error;
};

struct NotASuperamalgam : Error {
    using Error::Error;
};

struct NotAPartialOrder : Error {
    NotAPartialOrder(std::string msg, Report r) : Error(std::move(msg)), report(std::move(r)) {}
    Report report;
};

struct TheoryRequiresTransitivity : Error {
    using Error::Error;
};

struct NotAPoset : Error {
    NotAPoset(std::string msg, Report r) : Error(std::move(msg)), report(std::move(r)) {}
    Report report;
};

struct NotIsotone : Error {
    NotIsotone(std::string msg, std::string wx, std::string wy)
        : Error(std::move(msg)), x(std::move(wx)), y(std::move(wy)) {}
    std::string x, y;
};

struct NotExtensive : Error {
    NotExtensive(std::string msg, std::string wx) : Error(std::move(msg)), x(std::move(wx)) {}
    std::string x;
};

struct NotContractive : Error {
    NotContractive(std::string msg, std::string wx) : Error(std::move(msg)), x(std::move(wx)) {}
    std::string x;
};

/// Search ran out of wall-clock budget; distinct from an exhausted space.
struct TimeBudgetExceeded : Error {
    using Error::Error;
};

}  // namespace amalg
