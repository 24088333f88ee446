#pragma once

#include <stdexcept>

namespace tessella {

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Search or enumeration hit its configured limit.
struct ResourceExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tessella
