#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace erlab {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A search or enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An object would exceed a representable size (e.g. a product graph).
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A documented precondition of a procedure does not hold. Carries a
/// witness (vertex list) when the violation has one.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(const std::string& what, std::vector<int> witness = {})
        : std::invalid_argument(what), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

/// Malformed serialized input; `offset` is the byte offset of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A construction failed its own structural self-check.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace erlab
