#pragma once

#include <stdexcept>
#include <string>

namespace hlya {

/// Input text could not be understood. `where` carries a JSON-path-like
/// location ("$.binary[0][1][0]") or a byte offset when available.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, std::string where = {})
        : std::runtime_error(where.empty() ? msg : msg + " at " + where), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// A documented operation precondition does not hold for the given input.
/// `name` is the stable identifier surfaced by the CLI (exit code 3), e.g.
/// "NoCompatibleSection" or "NotACocycle".
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

} // namespace hlya
