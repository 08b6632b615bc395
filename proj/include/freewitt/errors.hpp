#pragma once

#include <stdexcept>
#include <string>

namespace freewitt {

// Raised when an operation's domain precondition fails. name() is the stable
// identifier surfaced by the CLI (e.g. "DivisionByNonUnit").
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace freewitt
