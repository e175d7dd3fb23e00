#pragma once

#include <stdexcept>
#include <string>

namespace codedml {

// Every failure mode the library reports has a named type so callers can
// distinguish bad configuration from bad runtime state in tests and at the CLI.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero requested") {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error(msg) {}
};

struct QuantOverflow : Error {
    explicit QuantOverflow(const std::string& msg) : Error(msg) {}
};

struct DuplicatePoints : Error {
    explicit DuplicatePoints(const std::string& msg) : Error(msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct InsufficientResults : Error {
    explicit InsufficientResults(const std::string& msg) : Error(msg) {}
};

struct DuplicateEvalPoint : Error {
    explicit DuplicateEvalPoint(const std::string& msg) : Error(msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

struct SchemeCollapse : Error {
    explicit SchemeCollapse(const std::string& msg) : Error(msg) {}
};

struct InsufficientVerifiedResults : Error {
    explicit InsufficientVerifiedResults(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct MismatchedRuns : Error {
    explicit MismatchedRuns(const std::string& msg) : Error(msg) {}
};

} // namespace codedml
