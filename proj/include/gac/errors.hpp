#pragma once

#include <stdexcept>
#include <string>

namespace gac {

// Malformed or truncated compressed input.
struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gac
