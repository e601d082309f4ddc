#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cvdw {

/// A precondition on the arguments of an operation was violated.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// (t, d) generated fewer than k distinct residues.
class DegenerateProgression : public InvalidArgument {
public:
    DegenerateProgression(const std::string& what, std::int64_t distinct)
        : InvalidArgument(what), distinct_(distinct) {}

    std::int64_t distinct_count() const noexcept { return distinct_; }

private:
    std::int64_t distinct_;
};

/// An enumeration would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructed object failed its own verification. Always a bug.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cvdw
