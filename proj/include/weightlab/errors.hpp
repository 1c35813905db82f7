#pragma once

#include <stdexcept>
#include <string>

namespace weightlab {

// Malformed input: bad ids, loops, missing lists, out-of-list pins.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive enumeration would exceed its size limit.
class EnumerationTooLarge : public InputError {
public:
    explicit EnumerationTooLarge(const std::string& what) : InputError(what) {}
};

}  // namespace weightlab
