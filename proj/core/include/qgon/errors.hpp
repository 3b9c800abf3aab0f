#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgon {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by the zero element of Q or Q(q).
struct DivideByZeroError : Error {
    using Error::Error;
};

// Specialization of a rational function at a point where the (already
// normalized) denominator vanishes.
struct PoleError : Error {
    using Error::Error;
};

// A grid was asked for a node index it does not have.
struct GridRangeError : Error {
    GridRangeError(std::size_t missing_index, std::size_t grid_size)
        : Error("grid has " + std::to_string(grid_size) +
                " node(s) but node z_" + std::to_string(missing_index) +
                " is required"),
          missing_index(missing_index),
          grid_size(grid_size) {}
    std::size_t missing_index;
    std::size_t grid_size;
};

// A polynomial sequence violates the structural axioms (wrong degree,
// p_0 != 1, p_n(0) != 0, ...).
struct BasisError : Error {
    using Error::Error;
};

// Argument shape mismatch (e.g. interpolation data of the wrong length).
struct ArgumentError : Error {
    using Error::Error;
};

// Node-expression syntax error; offset is a byte position into the input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

// Exact arithmetic produced something structurally impossible (a division
// that should be exact left a remainder, ...). Signals a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace qgon
