#ifndef RMAP_ERRORS_HPP
#define RMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rmap {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric iteration exhausted its budget (root finding, path tracking).
struct NonConvergence : Error {
    using Error::Error;
};

// Input function fails the degree >= 2 hypothesis or is otherwise unusable.
struct DegenerateFunction : Error {
    using Error::Error;
};

// Integer ramification bookkeeping does not close (odd or negative genus).
struct InconsistentRamification : Error {
    using Error::Error;
};

// A critical value has an imaginary part beyond tolerance.
struct NotFortunate : Error {
    using Error::Error;
};

// Candidate closed path self-intersects.
struct NotJordan : Error {
    using Error::Error;
};

// Combinatorial map violates its structural invariants.
struct MalformedMap : Error {
    using Error::Error;
};

// Vertex labelling fails the consistency conditions required by an operation.
struct InconsistentLabelling : Error {
    using Error::Error;
};

// Labelled map cannot be turned into a permutation constellation.
struct InconsistentMap : Error {
    using Error::Error;
};

// Constellation fails product-identity or transitivity.
struct InvalidConstellation : Error {
    using Error::Error;
};

// Two tracked fiber points collided mid-path.
struct PathJump : Error {
    using Error::Error;
};

// A lifted arc end cannot be assigned to a unique vertex.
struct AmbiguousSnap : Error {
    using Error::Error;
};

// Rendering requested on a map without usable coordinates.
struct MissingCoords : Error {
    using Error::Error;
};

// File / JSON input problems.
struct IoError : Error {
    using Error::Error;
};

} // namespace rmap

#endif
