#pragma once

#include <stdexcept>
#include <string>

namespace segrank {

// Error categories map directly onto CLI exit codes:
//   io_error -> 1, config_error -> 2, numeric_error -> 3.

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace segrank
