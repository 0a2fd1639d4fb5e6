#ifndef MODCYCLE_ERRORS_HPP
#define MODCYCLE_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace modcycle {

/// Bad argument from the caller: out-of-range id, illegal operation.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the documented domain of an operation.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed interchange data; `offset` is the byte offset of the fault.
class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t offset, const std::string& what)
        : std::runtime_error("byte " + std::to_string(offset) + ": " + what), offset_(offset), detail_(what) {}

    std::size_t offset() const { return offset_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t offset_;
    std::string detail_;
};

/// A search ran out of its node budget. The answer is unknown, not "no".
class Indeterminate : public std::runtime_error {
public:
    Indeterminate(std::uint64_t budget, const std::string& what)
        : std::runtime_error(what + " (node budget " + std::to_string(budget) + " exhausted)"),
          budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

}  // namespace modcycle

#endif
