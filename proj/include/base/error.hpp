#pragma once

#include <stdexcept>
#include <string>

namespace base {

// Error conditions raised by the exact kernels. Every failure mode the
// library promises to detect maps to one of these; nothing is reported
// through return codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotExpandable : Error {
    using Error::Error;
};
struct InsufficientOrder : Error {
    using Error::Error;
};
struct NotDominant : Error {
    using Error::Error;
};
struct WindowOverflow : Error {
    using Error::Error;
};
struct PrecisionExhausted : Error {
    using Error::Error;
};
struct NotDeep : Error {
    using Error::Error;
};
struct NotYetDeep : Error {
    using Error::Error;
};
struct NoStabilization : Error {
    using Error::Error;
};
struct NonContracting : Error {
    using Error::Error;
};
struct ZeroComponent : Error {
    using Error::Error;
};
struct ConvergenceRegion : Error {
    using Error::Error;
};
struct NonInvertibleAtPoint : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace base
