#pragma once

#include <stdexcept>
#include <string>

namespace ebetti {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction / queries
struct LoopEdgeError : Error {
    using Error::Error;
};
struct VertexOutOfRangeError : Error {
    using Error::Error;
};
struct NotDisjointError : Error {
    using Error::Error;
};
struct EdgeAbsentError : Error {
    using Error::Error;
};

// weight systems and instances
struct InvalidWeightsError : Error {
    using Error::Error;
};
struct UnsupportedInstanceError : Error {
    using Error::Error;
};

// closed-form dispatch reached a state no table row covers; must be unreachable
struct DispatchGapError : Error {
    using Error::Error;
};

// homology oracle
struct DimensionMismatchError : Error {
    using Error::Error;
};
// a nonzero local cohomology dimension appeared above a proven degree bound
struct DegreeBoundError : Error {
    using Error::Error;
};

// serialization
struct ParseError : Error {
    using Error::Error;
};

}  // namespace ebetti
