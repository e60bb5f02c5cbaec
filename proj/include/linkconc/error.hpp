#pragma once

#include <stdexcept>
#include <string>

namespace linkconc {

// Every user-facing failure (bad input, violated precondition) throws this;
// internal logic errors use assertions instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace linkconc
