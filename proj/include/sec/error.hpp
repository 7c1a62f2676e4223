#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sec {

enum class ErrorKind {
    InvalidArgument,
    DisconnectedInput,
    EdgeNotFound,
    NotRegular,
    SearchBudgetExceeded,
    PreconditionViolated,
    NotOneFactorable,
    MuTooLarge,
    MuMismatch,
    NoSuchColoring,
    NotTwoSimultaneous,
    NotHamiltonian,
    OddCircuit,
    ResidualNotBipartite,
    NoOcdcFound,
    InvalidTrade,
    NotSymmetric,
    NotBipartite,
    TooFewClasses,
    InvalidCover,
    LimitExceeded,
    NotEvenGraph,
    NotGraphic,
    ElementBelowMu,
    ParseError,
    DuplicateEdge,
    LoopEdge,
    BipartitionViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI exit-status mapping) can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Node counter shared by the exhaustive searches. Exceeding the limit is an
/// error, never an "absent" answer.
class SearchBudget {
public:
    static constexpr long long default_limit = 100'000'000;

    explicit SearchBudget(long long limit = default_limit) : limit_(limit) {}

    void tick()
    {
        if (++used_ > limit_)
            throw Error(ErrorKind::SearchBudgetExceeded,
                        "node limit " + std::to_string(limit_) + " exhausted");
    }

    long long used() const noexcept { return used_; }
    long long limit() const noexcept { return limit_; }

private:
    long long limit_;
    long long used_ = 0;
};

} // namespace sec
