// ============================================================================
// arglp/errors.hpp — error types shared across the library
// ============================================================================

#ifndef ARGLP_ERRORS_HPP
#define ARGLP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace arglp {

// Position of a token in an input file, 1-based.
struct SourceSpan {
    int line = 1;
    int column = 1;
    bool operator==(const SourceSpan&) const = default;
};

// Syntax-level failure while reading the framework text format.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, SourceSpan span)
        : std::runtime_error(std::move(message)), span_(span) {}

    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

enum class ViolationCode {
    UnknownTarget,
    SourceNotArgument,
    SupportCycle,
    KindTargetViolation,
    NameClash,
    InvalidName,
};

std::string to_string(ViolationCode code);

// One structural-constraint violation found by validate().
struct Violation {
    ViolationCode code;
    std::string message;
    std::vector<std::string> elements;  // offending element names (cycle order for SupportCycle)
};

// Thrown by operations that require a valid framework when given an invalid one.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

// An enumeration bound (atoms or elements) was exceeded without force.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The input program already uses atoms from the reserved fresh-atom
// namespace ("__f...") and cannot be normalized.
class ReservedAtomError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Breach of an internal invariant (non-unique well-founded model,
// non-converging monotone iteration, ...). Never expected on valid inputs.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace arglp

#endif
