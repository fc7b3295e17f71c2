#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spnet {

/// A caller broke an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested size is beyond the configured enumeration or DP budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::size_t requested, std::size_t limit)
        : std::runtime_error(what + ": requested " + std::to_string(requested) +
                             ", budget " + std::to_string(limit)),
          requested_(requested), limit_(limit) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t requested_;
    std::size_t limit_;
};

/// A lookup into a count table past what has been filled.
class TableUnderflow : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Two routes that must agree exactly did not. Always an implementation bug.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Series node with a series child, parallel node with a parallel child,
/// or a non-unit node with fewer than two children.
class AlternationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Root finder was given an interval on which the function does not cross the target.
class BracketingError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace spnet
