#pragma once

#include <stdexcept>
#include <string>

namespace cms {

/// Base class for every error raised by the engine. `code()` is a stable,
/// machine-readable identifier used by the command-line tool.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& message)
        : Error("InvalidArgument", message) {}
};

/// A term x_i/(x_i - x_j) * h of the operator recursion did not reduce to a
/// Laurent polynomial. Indices are 0-based; `order` is the recursion level.
class DivisionObstruction : public Error {
public:
    DivisionObstruction(int i, int j, int order)
        : Error("DivisionObstruction",
                "division by (x_" + std::to_string(i + 1) + " - x_" +
                    std::to_string(j + 1) + ") failed at order " +
                    std::to_string(order)),
          i_(i), j_(j), order_(order) {}

    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }
    int order() const noexcept { return order_; }

private:
    int i_, j_, order_;
};

class ClosureViolation : public Error {
public:
    explicit ClosureViolation(const std::string& message)
        : Error("ClosureViolation", message) {}
};

class GroupingMismatch : public Error {
public:
    explicit GroupingMismatch(const std::string& message)
        : Error("GroupingMismatch", message) {}
};

class DecompositionGap : public Error {
public:
    explicit DecompositionGap(const std::string& message)
        : Error("DecompositionGap", message) {}
};

class InfiniteClass : public Error {
public:
    explicit InfiniteClass(const std::string& message)
        : Error("InfiniteClass", message) {}
};

class NotReduced : public Error {
public:
    explicit NotReduced(const std::string& message)
        : Error("NotReduced", message) {}
};

class EnumerationInvalid : public Error {
public:
    explicit EnumerationInvalid(const std::string& message)
        : Error("EnumerationInvalid", message) {}
};

class NotTypical : public Error {
public:
    explicit NotTypical(const std::string& message)
        : Error("NotTypical", message) {}
};

class NonAdmissible : public Error {
public:
    explicit NonAdmissible(const std::string& message)
        : Error("NonAdmissible", message) {}
};

}  // namespace cms
