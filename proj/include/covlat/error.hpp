#pragma once

#include <stdexcept>
#include <string>

namespace covlat {

/// Bad input: malformed files, invalid graphs, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parse failure with the 1-based line it occurred on.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Enumeration or search refused because the instance is too large.
class LimitError : public InputError {
public:
    using InputError::InputError;
};

/// A structural property that must hold for valid input did not.
///
/// Raised by round-trip checks, the lemma/theorem checks in the dimension
/// report, and relabeling.  `instance` carries a serialization of the
/// offending input so that the failure can be reproduced.
class InconsistencyError : public std::logic_error {
public:
    InconsistencyError(const std::string& what, std::string instance)
        : std::logic_error(what), instance_(std::move(instance)) {}

    const std::string& instance() const { return instance_; }

private:
    std::string instance_;
};

}  // namespace covlat
