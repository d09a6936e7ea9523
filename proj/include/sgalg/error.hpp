#pragma once

#include <stdexcept>
#include <string>

namespace sgalg {

// Exit codes used by the CLI. Library errors carry the matching category so
// the front end can map them without string sniffing.
enum class ExitCode : int {
    ok = 0,
    usage = 1,
    parse = 2,
    ambiguity = 3,
    cap_exceeded = 4,
};

struct Error : std::runtime_error {
    ExitCode code;
    Error(ExitCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(ExitCode::usage, msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(ExitCode::parse, msg) {}
};

// Root selection could not be resolved at the available precision.
struct AmbiguityError : Error {
    explicit AmbiguityError(const std::string& msg) : Error(ExitCode::ambiguity, msg) {}
};

// An internal iteration or enumeration cap was hit before convergence.
struct CapExceededError : Error {
    explicit CapExceededError(const std::string& msg) : Error(ExitCode::cap_exceeded, msg) {}
};

// Domain violations (singular kernels, zero values, bad indices). These are
// caught internally by retry logic where the contracts allow it; escaping to
// the CLI they map to the ambiguity code.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(ExitCode::ambiguity, msg) {}
};

}  // namespace sgalg
