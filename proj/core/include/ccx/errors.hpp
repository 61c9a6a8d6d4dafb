#pragma once

#include <stdexcept>
#include <string>

namespace ccx {

// Precondition violations on operation inputs. CLI exit code 2.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Budget exhaustion / failed stabilization of a limit quantity. CLI exit code 3.
// Never silently truncate: computations that cannot certify a stable value
// must throw this instead of returning one.
struct StabilizationError : std::runtime_error {
    explicit StabilizationError(const std::string& what) : std::runtime_error(what) {}
};

// A checked internal invariant failed. CLI exit code 4.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace ccx
