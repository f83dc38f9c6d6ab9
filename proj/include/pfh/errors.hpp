#pragma once

#include <stdexcept>
#include <string>

namespace pfh {

// Shape parameters outside the hypotheses (n >= 1, t >= 1).
struct InvalidShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured budget (enumeration size, recursion depth, ...) was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All redraws exhausted without reaching a generic instance.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pfh
