#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "odgraph/group.hpp"

namespace od {

/// Malformed group text. `offset` is the byte position of the problem.
class SpecSyntaxError : public std::invalid_argument {
public:
    SpecSyntaxError(const std::string& message, std::size_t offset)
        : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Well-formed text naming a group outside a family's parameter range (e.g. "D2").
class SpecConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Grammar:
///   spec := atom ("x" atom)*
///   atom := ("Z" | "D" | "U") nat
/// Whitespace is ignored and letters are case-insensitive. Z needs n >= 1,
/// D needs n >= 3, U needs n >= 2.
GroupSpec parse_spec(std::string_view text);

}  // namespace od
