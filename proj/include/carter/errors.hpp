#pragma once

#include <stdexcept>
#include <string>

namespace carter {

enum class ErrorKind {
    NotWeaklyDecreasing,
    BadModulus,
    DegreeMismatch,
    InvalidParams,
    DomainError,
    TooLarge,
    NotRegular,
    OddPrimeRequired,
    CriterionDisagreement,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace carter
