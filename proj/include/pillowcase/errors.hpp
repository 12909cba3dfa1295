#pragma once

#include <stdexcept>
#include <string>

namespace pillowcase {

// Exit-code mapping used by the CLI:
//   usage_error / resource_error -> 2, io_error -> 3, consistency_error -> 4.

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input files, unwritable cache directories, corrupt cached blocks.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical identity that must hold failed to hold (rank deficiency,
// non-quasimodular fit residual, oracle mismatch).  These are bugs or
// insufficient truncation, never user errors.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds a configured enumeration bound.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pillowcase
