#ifndef CROSSCUT_ERRORS_HPP
#define CROSSCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crosscut {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input file is malformed; carries the 1-based line number.
struct ParseError : Error {
    ParseError(int line_no, const std::string& msg)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

/// A graph that must be planar is not.
struct NotPlanarError : Error {
    using Error::Error;
};

/// A crossing configuration is structurally inconsistent with its graph.
struct ConfigError : Error {
    using Error::Error;
};

/// Crossing configuration violates goodness (adjacent edges cross, or a pair
/// crosses more than once).
struct NonGoodError : Error {
    using Error::Error;
};

/// Crossing configuration cannot be realized by any drawing.
struct InfeasibleConfigError : Error {
    using Error::Error;
};

/// Instance exceeds a hard size cap (brute-force oracle).
struct TooLargeError : Error {
    using Error::Error;
};

/// An operation was called outside its contract.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace crosscut

#endif
