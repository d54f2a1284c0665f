#pragma once

#include <stdexcept>

namespace pirac {

// Raised when a brute-force routine would exceed its documented enumeration
// budget. The CLI maps this to exit code 2; plain parameter errors
// (std::invalid_argument) map to exit code 1.
struct feasibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pirac
