#pragma once

#include <stdexcept>
#include <string>

namespace influence {

// Malformed or inconsistent input data. The CLI maps this to exit code 2,
// as opposed to usage errors (exit code 1).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace influence
