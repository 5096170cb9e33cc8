#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridcomm {

/// Structural violation on a Network: duplicate id, missing endpoint,
/// self-loop, unknown node.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + (line == 0 ? "" : ", line " + std::to_string(line)) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation's precondition does not hold (disconnected network,
/// zero edges, empty control list, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gridcomm
