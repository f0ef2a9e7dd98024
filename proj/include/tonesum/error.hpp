#pragma once

#include <stdexcept>

namespace tonesum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad usage, out-of-range parameter, or malformed resource file (CLI exit 1).
struct ConfigError : Error {
    using Error::Error;
};

/// Bad or insufficient input data: empty cluster, empty candidate pool,
/// missing or empty reference summary (CLI exit 2).
struct DataError : Error {
    using Error::Error;
};

/// Broken internal invariant, e.g. a term absent from precomputed stats.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace tonesum
