#pragma once

#include <stdexcept>
#include <string>

namespace revtri {

/// Malformed input: bad dimensions, invalid parameters, bad grids, bad scenario files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested construction or witness that the toolkit does not know how to build.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The sharpness search found no admissible candidate.
class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace revtri
