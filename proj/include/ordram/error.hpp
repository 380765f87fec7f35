#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordram {

enum class ErrorKind {
    SharedVertex,
    IdenticalEdge,
    InvalidArgument,
    Format,
    OracleLimitExceeded,
    LimitExceeded,
    NotARedClique,
    NotAnHEdge,
    EdgeNotRed,
    InsufficientVertices,
    AlgorithmStuck,
    NoneFound,
    BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure in the library is reported through this type; the
// kind lets callers (and the CLI exit-code mapping) tell them apart.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace ordram
