#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Argument outside the admissible domain of an operation (M out of range,
/// r outside (0,1), negative weights, F_M(r) >= 1 for the starred family).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The functional does not change sign on the admissible interval.
class NoSignChange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root solver ran out of its iteration budget.
class IterationBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A truncated coefficient sum cannot certify the requested accuracy.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

} // namespace bohr
